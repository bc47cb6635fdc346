#include "dgorder/io.hpp"

#include <fstream>
#include <set>
#include <regex>
#include <sstream>

namespace dgo {

namespace {

struct Token {
    std::string text;
    std::size_t line = 0, column = 0;
};

[[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& msg) {
    throw Error(ErrorCode::ParseError, std::to_string(line) + ":" + std::to_string(column) + ": " + msg);
}
[[noreturn]] void fail(const Token& t, const std::string& msg) { fail(t.line, t.column, msg); }

std::vector<std::vector<Token>> tokenize(const std::string& text) {
    std::vector<std::vector<Token>> lines;
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::vector<Token> tokens;
        std::size_t i = 0;
        while (i < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
            tokens.push_back({raw.substr(i, j - i), number, i + 1});
            i = j;
        }
        if (!tokens.empty()) lines.push_back(std::move(tokens));
    }
    return lines;
}

Q rational(const Token& t) {
    static const std::regex form(R"(-?\d+(/\d+)?)");
    if (!std::regex_match(t.text, form)) fail(t, "expected a rational number, got '" + t.text + "'");
    Q q(t.text);
    if (q.get_den() == 0) fail(t, "zero denominator");
    q.canonicalize();
    return q;
}

long integer(const Token& t) {
    static const std::regex form(R"(-?\d+)");
    if (!std::regex_match(t.text, form) || t.text.size() > 18) fail(t, "expected an integer, got '" + t.text + "'");
    return std::stol(t.text);
}

std::size_t index(const Token& t, std::size_t bound) {
    long v = integer(t);
    if (v < 0 || static_cast<std::size_t>(v) >= bound)
        fail(t, "index " + t.text + " out of range 0.." + std::to_string(bound == 0 ? 0 : bound - 1));
    return static_cast<std::size_t>(v);
}

CoefficientRing ring_of(const Token& t) {
    std::smatch m;
    try {
        if (t.text == "Q") return CoefficientRing::rationals();
        if (t.text == "Z") return CoefficientRing::integers();
        if (std::regex_match(t.text, m, std::regex(R"(F\((\d+)\))"))) return CoefficientRing::prime_field(std::stol(m[1]));
        if (std::regex_match(t.text, m, std::regex(R"(Z_loc\((\d+)\))"))) return CoefficientRing::localized(std::stol(m[1]));
    } catch (const Error& e) {
        fail(t, e.what());
    }
    fail(t, "unknown ring '" + t.text + "' (expected Q, Z, Z_loc(p) or F(p))");
}

void expect_count(const std::vector<Token>& line, std::size_t n, const std::string& what) {
    if (line.size() != n) {
        const Token& at = line.size() > n ? line[n] : line.back();
        fail(at.line, line.size() > n ? at.column : at.column + at.text.size(), "expected " + what);
    }
}

} // namespace

AlgebraFile parse_algebra_file(const std::string& text) {
    const auto lines = tokenize(text);
    std::optional<CoefficientRing> ring;
    std::vector<std::string> names;
    std::vector<int> degrees;
    struct Entry {
        std::vector<Token> tokens;
    };
    std::vector<Entry> mult, diff, order_rows, module_lines;
    std::optional<std::vector<Token>> unit_line, blocks_line;
    std::string section;
    const std::set<std::string> keywords{"ring", "basis", "mult", "unit", "differential", "order", "blocks", "module"};
    std::set<std::string> seen;

    for (const auto& line : lines) {
        const Token& head = line.front();
        if (keywords.count(head.text)) {
            if (!seen.insert(head.text).second) fail(head, "duplicate section '" + head.text + "'");
            section = head.text;
            if (section == "ring") {
                expect_count(line, 2, "one ring name");
                ring = ring_of(line[1]);
            } else if (section == "unit") {
                unit_line = line;
            } else if (section == "blocks") {
                blocks_line = line;
            } else if (line.size() > 1) {
                fail(line[1], "section header '" + section + "' takes no arguments");
            }
            continue;
        }
        if (section.empty() || section == "ring" || section == "unit" || section == "blocks")
            fail(head, "data outside a section: '" + head.text + "'");
        if (section == "basis") {
            expect_count(line, 2, "a name and a degree");
            names.push_back(head.text);
            degrees.push_back(static_cast<int>(integer(line[1])));
        } else if (section == "mult") {
            expect_count(line, 4, "i j k value");
            mult.push_back({line});
        } else if (section == "differential") {
            expect_count(line, 3, "i j value");
            diff.push_back({line});
        } else if (section == "order") {
            order_rows.push_back({line});
        } else {
            module_lines.push_back({line});
        }
    }
    if (!ring) fail(1, 1, "missing 'ring' section");
    if (names.empty()) fail(1, 1, "missing or empty 'basis' section");
    const std::size_t n = names.size();

    AlgebraFile out;
    GradedAlgebra a;
    try {
        a = GradedAlgebra(*ring, names, degrees);
    } catch (const Error& e) {
        fail(1, 1, e.what());
    }
    for (const auto& [t] : mult) {
        std::size_t i = index(t[0], n), j = index(t[1], n), k = index(t[2], n);
        try {
            a.set_constant(i, j, k, rational(t[3]));
        } catch (const Error& e) {
            if (e.code() == ErrorCode::ParseError) throw;
            fail(t[3], e.what());
        }
    }
    if (unit_line) {
        if (unit_line->size() != n + 1) fail(unit_line->front(), "unit needs " + std::to_string(n) + " coordinates");
        QVec u;
        for (std::size_t i = 1; i <= n; ++i) u.push_back(rational((*unit_line)[i]));
        try {
            a.set_unit(u);
        } catch (const Error& e) {
            fail(unit_line->front(), e.what());
        }
    } else if (!a.detect_unit()) {
        fail(1, 1, "no unit given and none could be solved for");
    }
    QMat d(n, n);
    for (const auto& [t] : diff) {
        std::size_t i = index(t[0], n), j = index(t[1], n);
        d(j, i) = rational(t[2]);
        try {
            d(j, i) = ring->normalize(d(j, i));
        } catch (const Error& e) {
            fail(t[2], e.what());
        }
    }
    out.algebra = DgAlgebra{a, d};

    if (!order_rows.empty()) {
        std::vector<QVec> rows;
        for (const auto& [t] : order_rows) {
            if (t.size() != n) fail(t.front(), "order rows need " + std::to_string(n) + " entries");
            QVec r;
            for (const auto& tok : t) r.push_back(rational(tok));
            rows.push_back(r);
        }
        out.order = ZLattice(n, rows);
    }
    if (blocks_line) {
        BlockLayout bl;
        for (std::size_t i = 1; i < blocks_line->size(); ++i) {
            long s = integer((*blocks_line)[i]);
            if (s <= 0) fail((*blocks_line)[i], "block sizes must be positive");
            bl.sizes.push_back(static_cast<std::size_t>(s));
        }
        if (bl.sizes.empty()) fail(blocks_line->front(), "blocks needs at least one size");
        if (bl.dim() != n) fail(blocks_line->front(), "block sizes do not match the basis size");
        out.blocks = bl;
    }
    if (!module_lines.empty()) {
        std::optional<std::vector<int>> mdeg;
        for (const auto& [t] : module_lines)
            if (t.front().text == "degrees") {
                if (mdeg) fail(t.front(), "duplicate module degrees");
                mdeg.emplace();
                for (std::size_t i = 1; i < t.size(); ++i) mdeg->push_back(static_cast<int>(integer(t[i])));
            }
        if (!mdeg || mdeg->empty()) fail(module_lines.front().tokens.front(), "module needs a 'degrees' line first");
        const std::size_t m = mdeg->size();
        std::vector<QMat> action(n, QMat(m, m));
        QMat delta(m, m);
        for (const auto& [t] : module_lines) {
            const std::string& kind = t.front().text;
            if (kind == "degrees") continue;
            if (kind == "act") {
                expect_count(t, 5, "act i j k value");
                action[index(t[1], n)](index(t[3], m), index(t[2], m)) = rational(t[4]);
            } else if (kind == "delta") {
                expect_count(t, 4, "delta j k value");
                delta(index(t[2], m), index(t[1], m)) = rational(t[3]);
            } else {
                fail(t.front(), "expected 'degrees', 'act' or 'delta' in module section");
            }
        }
        try {
            out.module = DgModule(share(out.algebra), *mdeg, action, delta);
        } catch (const Error& e) {
            fail(module_lines.front().tokens.front(), e.what());
        }
    }
    return out;
}

AlgebraFile read_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra_file(ss.str());
}

std::string write_algebra_file(const AlgebraFile& file) {
    const GradedAlgebra& a = file.algebra.algebra;
    const std::size_t n = a.dim();
    std::ostringstream os;
    os << "ring " << a.ring().name() << "\n";
    os << "basis\n";
    for (std::size_t i = 0; i < n; ++i) os << "  " << a.names()[i] << " " << a.degree(i) << "\n";
    os << "mult\n";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (a.constant(i, j, k) != 0) os << "  " << i << " " << j << " " << k << " " << a.constant(i, j, k) << "\n";
    os << "unit";
    for (const auto& x : a.unit()) os << " " << x;
    os << "\n";
    os << "differential\n";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (file.algebra.differential(j, i) != 0) os << "  " << i << " " << j << " " << file.algebra.differential(j, i) << "\n";
    if (file.order) {
        os << "order\n";
        for (const auto& row : file.order->basis_vectors()) {
            os << " ";
            for (const auto& x : row) os << " " << x;
            os << "\n";
        }
    }
    if (file.blocks) {
        os << "blocks";
        for (auto s : file.blocks->sizes) os << " " << s;
        os << "\n";
    }
    if (file.module) {
        const DgModule& m = *file.module;
        os << "module\n  degrees";
        for (int d : m.degrees()) os << " " << d;
        os << "\n";
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m.dim(); ++j)
                for (std::size_t k = 0; k < m.dim(); ++k)
                    if (m.action(i)(k, j) != 0) os << "  act " << i << " " << j << " " << k << " " << m.action(i)(k, j) << "\n";
        for (std::size_t j = 0; j < m.dim(); ++j)
            for (std::size_t k = 0; k < m.dim(); ++k)
                if (m.delta()(k, j) != 0) os << "  delta " << j << " " << k << " " << m.delta()(k, j) << "\n";
    }
    return os.str();
}

AlgebraFile to_file(const BuiltExample& ex) { return {ex.algebra, ex.order, ex.blocks, std::nullopt}; }

} // namespace dgo
