#include "dgorder/catalog.hpp"

#include <regex>

namespace dgo {

std::size_t matrix_unit(std::size_t n, std::size_t i, std::size_t j) { return i * n + j; }

GradedAlgebra graded_matrix_algebra(const CoefficientRing& ring, const std::vector<int>& vertex_degrees) {
    const std::size_t n = vertex_degrees.size();
    std::vector<std::string> names;
    std::vector<int> degs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
            degs.push_back(vertex_degrees[j] - vertex_degrees[i]);
        }
    GradedAlgebra a(ring, names, degs);
    QVec unit(n * n, Q(0));
    for (std::size_t i = 0; i < n; ++i) {
        unit[matrix_unit(n, i, i)] = 1;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) a.set_constant(matrix_unit(n, i, j), matrix_unit(n, j, k), matrix_unit(n, i, k), Q(1));
    }
    a.set_unit(unit);
    return a;
}

QMat inner_differential(const GradedAlgebra& a, const QVec& delta) {
    const std::size_t n = a.dim();
    QMat d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        QVec b = unit_vector(n, i);
        QVec left = a.multiply(delta, b);
        QVec right = a.multiply(b, delta);
        d.set_col(i, a.normalize(a.degree(i) % 2 == 0 ? left - right : left + right));
    }
    return d;
}

DgAlgebra mat2_dx(const Q& x, const CoefficientRing& ring) {
    GradedAlgebra a = graded_matrix_algebra(ring, {0, 1});
    QVec delta(4, Q(0));
    delta[matrix_unit(2, 0, 1)] = ring.normalize(x);
    return {a, inner_differential(a, delta)};
}

DgAlgebra mat3_complex(const Q& a11, const Q& a21, const CoefficientRing& ring) {
    GradedAlgebra a = graded_matrix_algebra(ring, {0, 0, 1});
    QVec delta(9, Q(0));
    delta[matrix_unit(3, 0, 2)] = ring.normalize(a11);
    delta[matrix_unit(3, 1, 2)] = ring.normalize(a21);
    return {a, inner_differential(a, delta)};
}

DgAlgebra dual_numbers(const CoefficientRing& ring) {
    GradedAlgebra a(ring, {"1", "X"}, {0, -1});
    a.set_constant(0, 0, 0, Q(1));
    a.set_constant(0, 1, 1, Q(1));
    a.set_constant(1, 0, 1, Q(1));
    a.set_unit({Q(1), Q(0)});
    QMat d(2, 2);
    d(0, 1) = 1; // d(X) = 1
    return {a, d};
}

DgAlgebra ground_algebra(const CoefficientRing& ring) {
    GradedAlgebra a(ring, {"1"}, {0});
    a.set_constant(0, 0, 0, Q(1));
    a.set_unit({Q(1)});
    return {a, QMat(1, 1)};
}

// ---- block layouts ----

std::size_t BlockLayout::dim() const {
    std::size_t d = 0;
    for (auto s : sizes) d += s * s;
    return d;
}

std::size_t BlockLayout::offset(std::size_t k) const {
    std::size_t d = 0;
    for (std::size_t i = 0; i < k; ++i) d += sizes[i] * sizes[i];
    return d;
}

std::size_t BlockLayout::index(std::size_t block, std::size_t i, std::size_t j) const {
    return offset(block) + i * sizes[block] + j;
}

DgAlgebra block_algebra(const BlockLayout& layout, const std::vector<Q>& x_values) {
    const auto ring = CoefficientRing::rationals();
    std::vector<std::string> names;
    std::vector<int> degs;
    for (std::size_t b = 0; b < layout.sizes.size(); ++b) {
        const std::size_t s = layout.sizes[b];
        if (s > 2) throw Error(ErrorCode::PreconditionFailed, "blocks larger than 2x2 are not graded here");
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) {
                names.push_back("b" + std::to_string(b) + ".e" + std::to_string(i + 1) + std::to_string(j + 1));
                degs.push_back(static_cast<int>(j) - static_cast<int>(i));
            }
    }
    GradedAlgebra a(ring, names, degs);
    QVec unit(layout.dim(), Q(0));
    QVec delta(layout.dim(), Q(0));
    for (std::size_t b = 0; b < layout.sizes.size(); ++b) {
        const std::size_t s = layout.sizes[b];
        for (std::size_t i = 0; i < s; ++i) {
            unit[layout.index(b, i, i)] = 1;
            for (std::size_t j = 0; j < s; ++j)
                for (std::size_t k = 0; k < s; ++k)
                    a.set_constant(layout.index(b, i, j), layout.index(b, j, k), layout.index(b, i, k), Q(1));
        }
        if (s == 2 && b < x_values.size()) delta[layout.index(b, 0, 1)] = x_values[b];
    }
    a.set_unit(unit);
    return {a, inner_differential(a, delta)};
}

OrderExample mat2_order(const Q& x) {
    DgAlgebra a = mat2_dx(x);
    return {a, ZLattice::standard(4), BlockLayout{{2}}};
}

OrderExample zp_order(long p, const Q& x) {
    DgAlgebra a = mat2_dx(x);
    std::vector<QVec> gens{a.algebra.unit()};
    for (std::size_t i = 0; i < 4; ++i) gens.push_back(Q(p) * unit_vector(4, i));
    return {a, ZLattice(4, gens), BlockLayout{{2}}};
}

OrderExample lambda2_order(const Q& x) {
    if (x == 0) throw Error(ErrorCode::PreconditionFailed, "lambda2 needs x != 0");
    DgAlgebra a = mat2_dx(x);
    QVec e12 = unit_vector(4, 1), e21 = unit_vector(4, 2);
    std::vector<QVec> gens{unit_vector(4, 0), x * e12, Q(1) / x * e21, unit_vector(4, 3)};
    return {a, ZLattice(4, gens), BlockLayout{{2}}};
}

OrderExample green_order(std::size_t factors, long p, const Q& x) {
    BlockLayout layout;
    layout.sizes.push_back(1);
    for (std::size_t k = 0; k < factors; ++k) layout.sizes.push_back(2);
    layout.sizes.push_back(1);
    std::vector<Q> xs(layout.sizes.size(), Q(0));
    for (std::size_t k = 1; k <= factors; ++k) xs[k] = x;
    DgAlgebra a = block_algebra(layout, xs);
    const std::size_t n = layout.dim();
    const std::size_t last = layout.sizes.size() - 1;
    std::vector<QVec> gens;
    // link the lower-right slot of block b with the upper-left slot of block b+1
    for (std::size_t b = 0; b < last; ++b) {
        std::size_t d_slot = layout.index(b, layout.sizes[b] - 1, layout.sizes[b] - 1);
        std::size_t a_slot = layout.index(b + 1, 0, 0);
        gens.push_back(unit_vector(n, d_slot) + unit_vector(n, a_slot));
        gens.push_back(Q(p) * unit_vector(n, a_slot));
    }
    for (std::size_t b = 1; b < last; ++b) {
        gens.push_back(unit_vector(n, layout.index(b, 0, 1)));
        gens.push_back(Q(p) * unit_vector(n, layout.index(b, 1, 0)));
    }
    return {a, ZLattice(n, gens), layout};
}

OrderExample s3_order(long p, const Q& x) { return green_order(1, p, x); }

// ---- descriptors ----

namespace {

Q parse_q(const std::string& s) {
    try {
        Q q(s);
        q.canonicalize();
        return q;
    } catch (const std::exception&) {
        throw Error(ErrorCode::PreconditionFailed, "not a rational number: " + s);
    }
}

long parse_long(const std::string& s) {
    try {
        return std::stol(s);
    } catch (const std::exception&) {
        throw Error(ErrorCode::PreconditionFailed, "not an integer: " + s);
    }
}

CoefficientRing parse_ring(const std::string& s) {
    std::smatch m;
    if (s == "Q") return CoefficientRing::rationals();
    if (s == "Z") return CoefficientRing::integers();
    if (std::regex_match(s, m, std::regex(R"(F\(?(\d+)\)?)"))) return CoefficientRing::prime_field(std::stol(m[1]));
    if (std::regex_match(s, m, std::regex(R"(Z_loc\((\d+)\))"))) return CoefficientRing::localized(std::stol(m[1]));
    throw Error(ErrorCode::PreconditionFailed, "unknown ring " + s);
}

std::string get(const std::map<std::string, std::string>& params, const std::string& key, const std::string& def) {
    auto it = params.find(key);
    return it == params.end() ? def : it->second;
}

} // namespace

std::vector<std::string> example_names() {
    return {"mat2_dx", "mat3_complex", "dual_numbers", "mat2_order", "zp_order", "lambda2", "s3_order", "green_order"};
}

BuiltExample build_example(const std::string& name, const std::map<std::string, std::string>& params) {
    BuiltExample out;
    out.descriptor.name = name;
    auto param = [&](const std::string& key, const std::string& def) {
        std::string v = get(params, key, def);
        out.descriptor.params[key] = v;
        return v;
    };
    auto& expect = out.descriptor.expected;
    auto take_order = [&](OrderExample ex) {
        out.algebra = ex.algebra;
        out.order = ex.order;
        out.blocks = ex.blocks;
    };

    if (name == "mat2_dx") {
        Q x = parse_q(param("x", "1"));
        CoefficientRing ring = parse_ring(param("ring", "Q"));
        out.algebra = mat2_dx(x, ring);
        out.blocks = BlockLayout{{2}};
        expect["verify"] = "pass";
        if (ring.kind() == RingKind::Integers && x != 0) {
            std::string t = "Z/" + Q(abs(x)).get_str();
            expect["homology"] = x == 1 || x == -1 ? "0" : "0:" + t + ";1:" + t;
        } else if (ring.is_field()) {
            expect["homology"] = ring.normalize(x) != 0 ? "0" : "-1:1;0:2;1:1";
        }
    } else if (name == "mat3_complex") {
        Q a11 = parse_q(param("a11", "1"));
        Q a21 = parse_q(param("a21", "1"));
        CoefficientRing ring = parse_ring(param("ring", "Q"));
        out.algebra = mat3_complex(a11, a21, ring);
        expect["verify"] = "pass";
        if (ring.is_field() && (ring.normalize(a11) != 0 || ring.normalize(a21) != 0)) {
            expect["homology"] = "0:1";
            if (ring.normalize(a11) == 0) expect["cycles_dim"] = "5";
        }
    } else if (name == "dual_numbers") {
        out.algebra = dual_numbers(parse_ring(param("ring", "Q")));
        expect["verify"] = "pass";
        expect["homology"] = "0";
        expect["semisimple_category"] = "true";
    } else if (name == "mat2_order") {
        Q x = parse_q(param("x", "1"));
        take_order(mat2_order(x));
        expect["order"] = x.get_den() == 1 ? "dg-order" : "fails d-stability";
    } else if (name == "zp_order") {
        long p = parse_long(param("p", "5"));
        take_order(zp_order(p, parse_q(param("x", "1"))));
        expect["order"] = "dg-order";
        expect["classgroup_classical"] = (p % 4 == 1) ? "2" : "1";
        expect["classgroup_dg"] = "1";
        expect["hull"] = "Mat2(Z)";
    } else if (name == "lambda2") {
        take_order(lambda2_order(parse_q(param("x", "2"))));
        expect["order"] = "dg-order";
        expect["proper"] = "true";
        expect["homology"] = "0";
    } else if (name == "s3_order") {
        take_order(s3_order(parse_long(param("p", "3")), parse_q(param("x", "1"))));
        expect["order"] = "dg-order";
    } else if (name == "green_order") {
        long k = parse_long(param("k", "2"));
        if (k < 1) throw Error(ErrorCode::PreconditionFailed, "green_order needs k >= 1");
        take_order(green_order(static_cast<std::size_t>(k), parse_long(param("p", "3")), parse_q(param("x", "1"))));
        expect["order"] = "dg-order";
    } else {
        throw Error(ErrorCode::UnknownExample, name);
    }
    return out;
}

} // namespace dgo
