// dgo: verify dg-algebras and dg-orders, compute homology, radicals, hulls and class groups.

#include "dgorder/classgroups.hpp"
#include "dgorder/io.hpp"
#include "dgorder/radicals.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace dgo;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kCap = 3 };

std::string str(const Q& x) { return x.get_str(); }

json vec_json(const QVec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(str(x));
    return out;
}

std::string vec_text(const QVec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + str(v[i]);
    return s + "]";
}

// every report carries these keys
json report(const std::string& command) {
    return {{"command", command},
            {"status", "pass"},
            {"degrees", json::array()},
            {"invariant_factors", json::array()},
            {"generators", json::array()},
            {"caveats", json::array()}};
}

struct Output {
    bool as_json = false;
    json doc;
    std::ostringstream text;

    int finish(int code) {
        if (as_json) {
            doc["status"] = code == kPass ? "pass" : "fail";
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << text.str();
        }
        return code;
    }
};

DgAlgebra with_ring(const DgAlgebra& a, const CoefficientRing& ring) {
    const GradedAlgebra& g = a.algebra;
    GradedAlgebra out(ring, g.names(), g.degrees());
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (g.constant(i, j, k) != 0) out.set_constant(i, j, k, g.constant(i, j, k));
    out.set_unit(g.unit());
    QMat d = a.differential;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d(i, j) = ring.normalize(d(i, j));
    return {out, d};
}

DgOrder require_order(const AlgebraFile& f) {
    if (!f.order) throw Error(ErrorCode::PreconditionFailed, "the file has no order section");
    OrderVerification v = is_dg_order(f.algebra, *f.order, f.blocks);
    if (!v.order) throw Error(ErrorCode::PreconditionFailed, "not a dg-order: " + v.report.summary());
    return *v.order;
}

void add_check_lines(Output& out, const VerificationReport& r, const std::string& what) {
    for (const auto& c : r.checks) {
        out.text << what << " " << c.axiom << ": " << (c.passed ? "pass" : "FAIL");
        if (!c.passed && !c.detail.empty()) out.text << " (" << c.detail << ")";
        out.text << "\n";
        json jc = {{"object", what}, {"axiom", c.axiom}, {"passed", c.passed}, {"witness", c.witness}};
        if (!c.detail.empty()) jc["detail"] = c.detail;
        out.doc["checks"].push_back(jc);
    }
}

int cmd_verify(Output& out, const AlgebraFile& f) {
    out.doc = report("verify");
    out.doc["checks"] = json::array();
    bool ok = true;
    VerificationReport alg = verify_dg_algebra(f.algebra);
    add_check_lines(out, alg, "algebra");
    ok = ok && alg.passed();
    if (f.order && alg.passed()) {
        OrderVerification v = is_dg_order(f.algebra, *f.order, f.blocks);
        add_check_lines(out, v.report, "order");
        ok = ok && v.order.has_value();
        if (v.order) {
            out.text << "order proper: " << (v.flags.proper ? "yes" : "no") << "\n";
            out.doc["proper"] = v.flags.proper;
        }
        for (const auto& row : f.order->basis_vectors()) out.doc["generators"].push_back(vec_json(row));
    }
    if (f.module) {
        VerificationReport m = verify_dg_module(*f.module);
        add_check_lines(out, m, "module");
        ok = ok && m.passed();
    }
    for (const auto& c : out.doc["checks"])
        if (!c["passed"].get<bool>()) {
            out.text << "failing axiom: " << c["axiom"].get<std::string>() << "\n";
            out.doc["failing_axiom"] = c["axiom"];
            break;
        }
    out.text << (ok ? "verdict: pass\n" : "verdict: FAIL\n");
    return ok ? kPass : kFail;
}

int cmd_homology(Output& out, const AlgebraFile& f, const std::string& ring) {
    out.doc = report("homology");
    DgAlgebra a = f.algebra;
    std::string source = "algebra";
    if (ring == "Z") {
        if (f.order) {
            a = integral_form(f.algebra, *f.order).algebra;
            source = "order";
        } else if (a.ring().kind() != RingKind::Integers) {
            a = with_ring(a, CoefficientRing::integers());
        }
    } else if (a.ring().kind() == RingKind::Integers || a.ring().kind() == RingKind::LocalizedIntegers) {
        a = with_ring(a, CoefficientRing::rationals());
    }
    AlgebraRef ref = share(a);
    HomologyPresentation h = f.module && source == "algebra" && ring != "Z" ? homology(*f.module) : homology(ref);
    out.text << "homology over " << a.ring().name() << " of the " << (f.module && ring != "Z" ? "module" : source) << "\n";
    for (const auto& [deg, g] : h.groups) {
        json jd = {{"degree", deg}, {"free_rank", g.free_rank}, {"torsion", json::array()}};
        for (const auto& t : g.torsion) jd["torsion"].push_back(t.get_str());
        out.doc["degrees"].push_back(jd);
        out.text << "degree " << deg << ": ";
        std::vector<std::string> parts;
        if (g.free_rank) parts.push_back(a.ring().is_field() ? "dim " + std::to_string(g.free_rank)
                                                             : "free rank " + std::to_string(g.free_rank));
        for (const auto& t : g.torsion) parts.push_back("Z/" + t.get_str());
        if (parts.empty()) parts.push_back("0");
        for (std::size_t i = 0; i < parts.size(); ++i) out.text << (i ? " + " : "") << parts[i];
        out.text << "\n";
    }
    for (const auto& g : h.generators) out.doc["generators"].push_back(vec_json(g.representative));
    out.doc["summary"] = h.summary();
    out.text << "summary: " << h.summary() << "\n";
    return kPass;
}

void subspace_out(Output& out, const std::string& name, const Subspace& s) {
    out.text << name << " (dim " << s.dim() << "):";
    json rows = json::array();
    for (const auto& v : s.basis()) {
        out.text << " " << vec_text(v);
        rows.push_back(vec_json(v));
    }
    if (s.dim() == 0) out.text << " 0";
    out.text << "\n";
    out.doc[name] = rows;
}

int cmd_radicals(Output& out, const AlgebraFile& f) {
    out.doc = report("radicals");
    if (!f.algebra.ring().is_finite())
        throw Error(ErrorCode::UnsupportedRing, "radicals need finite-field coefficients");
    DgRadicals r = dg_radicals(share(f.algebra));
    subspace_out(out, "dgrad_l", r.left);
    subspace_out(out, "dgrad_r", r.right);
    subspace_out(out, "dgrad_2", r.two);
    subspace_out(out, "dgrad_l_cap_dgrad_r", r.left.intersect(r.right));
    out.text << "maximal left dg-ideals: " << r.maximal_left.size() << ", maximal right dg-ideals: " << r.maximal_right.size() << "\n";
    out.doc["maximal_left"] = r.maximal_left.size();
    out.doc["maximal_right"] = r.maximal_right.size();
    for (const auto& v : r.two.basis()) out.doc["generators"].push_back(vec_json(v));
    return kPass;
}

int cmd_simples(Output& out, const AlgebraFile& f) {
    out.doc = report("simples");
    if (!f.algebra.ring().is_finite())
        throw Error(ErrorCode::UnsupportedRing, "simple modules are enumerated over finite fields");
    auto simples = dg_simple_modules(share(f.algebra));
    out.text << simples.size() << " dg-simple module(s) up to isomorphism and shift\n";
    json list = json::array();
    for (std::size_t i = 0; i < simples.size(); ++i) {
        const DgModule& s = simples[i];
        out.text << "  S" << i << ": dim " << s.dim() << ", degrees";
        for (int d : s.degrees()) out.text << " " << d;
        out.text << "\n";
        list.push_back({{"dim", s.dim()}, {"degrees", s.degrees()}});
        out.doc["degrees"].push_back(s.degrees());
    }
    out.doc["simples"] = list;
    return kPass;
}

int cmd_hull(Output& out, const AlgebraFile& f) {
    out.doc = report("hull");
    HullResult h = dg_maximal_hull(require_order(f));
    out.text << "hull basis:\n";
    for (const auto& row : h.order.lattice.basis_vectors()) {
        out.text << "  " << vec_text(row) << "\n";
        out.doc["generators"].push_back(vec_json(row));
    }
    out.text << "moves:\n";
    json trace = json::array();
    for (const auto& m : h.trace) {
        out.text << "  p=" << m.prime << " " << m.side << " " << m.ideal << " index " << str(m.index) << "\n";
        trace.push_back({{"prime", m.prime}, {"side", m.side}, {"ideal", m.ideal}, {"index", str(m.index)}});
    }
    if (h.trace.empty()) out.text << "  none\n";
    out.text << "classically maximal: " << (h.classically_maximal ? "yes" : "no") << "\n";
    out.text << "certificate: " << h.certificate << "\n";
    out.doc["trace"] = trace;
    out.doc["classically_maximal"] = h.classically_maximal;
    out.doc["certificate"] = h.certificate;
    return kPass;
}

void group_out(Output& out, const FiniteAbelianGroup& g) {
    for (const auto& d : g.invariants) out.doc["invariant_factors"].push_back(d.get_str());
    out.doc["order"] = g.order().get_str();
}

void caveats_out(Output& out, const std::vector<std::string>& caveats) {
    for (const auto& c : caveats) {
        out.text << "caveat: " << c << "\n";
        out.doc["caveats"].push_back(c);
    }
}

int cmd_classgroup(Output& out, const AlgebraFile& f, const std::string& mode, const std::string& idempotent) {
    out.doc = report("classgroup");
    out.doc["mode"] = mode;
    DgOrder order = require_order(f);
    if (mode == "classical") {
        ClassGroupResult r = classical_class_group(order);
        out.text << "classical class group: " << r.group.str() << " (order " << r.group.order().get_str() << ")\n";
        out.text << "conductor: " << r.modulus << " Gamma\n";
        group_out(out, r.group);
        out.doc["conductor_exponent"] = r.modulus;
        caveats_out(out, r.caveats);
        return kPass;
    }
    if (mode == "dg") {
        DgClassGroupReport r = dg_idele_class_group(order);
        out.text << "dg idele class group: " << r.upper_bound.str() << " (" << r.label << ")\n";
        out.text << "cycle order: " << r.cycle_order << "\n";
        out.text << "exact: " << (r.exact ? "yes" : "no") << "\n";
        group_out(out, r.upper_bound);
        out.doc["label"] = r.label;
        out.doc["exact"] = r.exact;
        out.doc["cycle_order"] = r.cycle_order;
        caveats_out(out, r.caveats);
        return kPass;
    }
    // Mayer-Vietoris
    QVec e;
    if (!idempotent.empty()) {
        std::istringstream in(idempotent);
        std::string tok;
        while (in >> tok) e.push_back(Q(tok));
        for (auto& x : e) x.canonicalize();
        if (e.size() != f.algebra.dim()) throw Error(ErrorCode::DimensionMismatch, "idempotent has the wrong length");
    } else {
        for (const auto& c : central_homogeneous_idempotents(f.algebra))
            if (!is_zero(c) && c != f.algebra.algebra.unit()) {
                e = c;
                break;
            }
        if (e.empty()) throw Error(ErrorCode::NotCentralIdempotent, "no nontrivial central idempotent");
    }
    MvExactnessReport r = mv_exactness_check(order, e);
    out.text << "idempotent: " << vec_text(e) << "\n";
    out.text << "cycle units of the common quotient: " << r.units_checked << "\n";
    out.text << "image of component units: " << r.image_size << "\n";
    out.text << "composites vanish: " << (r.composites_vanish ? "yes" : "no") << "\n";
    out.text << "exact at the units: " << (r.exact_at_units ? "yes" : "no") << "\n";
    out.text << "restrictions free: " << (r.restriction_trivial ? "yes" : "no") << "\n";
    out.text << "inconclusive freeness tests: " << r.inconclusive << "\n";
    out.doc["generators"].push_back(vec_json(e));
    out.doc["units_checked"] = r.units_checked;
    out.doc["image_size"] = r.image_size;
    out.doc["composites_vanish"] = r.composites_vanish;
    out.doc["exact_at_units"] = r.exact_at_units;
    out.doc["restriction_trivial"] = r.restriction_trivial;
    out.doc["inconclusive"] = r.inconclusive;
    caveats_out(out, {"Eichler condition asserted"});
    return r.passed() ? kPass : kFail;
}

int cmd_example(Output& out, const std::string& name, const std::vector<std::string>& params, const std::string& path) {
    std::map<std::string, std::string> kv;
    for (const auto& p : params) {
        auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("example parameters are key=value, got " + p);
        kv[p.substr(0, eq)] = p.substr(eq + 1);
    }
    BuiltExample ex = build_example(name, kv);
    std::string text = "# example " + name;
    for (const auto& [k, v] : ex.descriptor.params) text += " " + k + "=" + v;
    text += "\n" + write_algebra_file(to_file(ex));
    if (path.empty() || path == "-") {
        if (out.as_json) {
            out.doc = report("example");
            out.doc["file"] = text;
            out.doc["expected"] = ex.descriptor.expected;
        } else {
            out.text << text;
        }
    } else {
        std::ofstream file(path);
        if (!file) throw Error(ErrorCode::PreconditionFailed, "cannot write " + path);
        file << text;
        out.doc = report("example");
        out.doc["path"] = path;
        out.doc["expected"] = ex.descriptor.expected;
        out.text << "wrote " << path << "\n";
    }
    return kPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dg-algebras, dg-orders and their class groups"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    app.add_flag("--json", out.as_json, "machine-readable report");

    std::string file, ring = "Q", mode = "classical", idempotent, example_name, example_path;
    std::vector<std::string> example_params;

    auto* verify = app.add_subcommand("verify", "check dg-algebra, order and module axioms");
    auto* homology_cmd = app.add_subcommand("homology", "per-degree homology");
    homology_cmd->add_option("--ring", ring, "Z uses the order (or integral structure constants)")->check(CLI::IsMember({"Z", "Q"}));
    auto* radicals = app.add_subcommand("radicals", "dg-radicals over a finite field");
    auto* simples = app.add_subcommand("simples", "dg-simple modules over a finite field");
    auto* hull = app.add_subcommand("hull", "dg-maximal hull of the order");
    auto* classgroup = app.add_subcommand("classgroup", "class groups of the order");
    classgroup->add_option("--mode", mode)->check(CLI::IsMember({"classical", "dg", "mv"}));
    classgroup->add_option("--idempotent", idempotent, "central idempotent for --mode mv, space separated");
    for (auto* sub : {verify, homology_cmd, radicals, simples, hull, classgroup})
        sub->add_option("file", file, "algebra description file")->required()->check(CLI::ExistingFile);
    auto* example = app.add_subcommand("example", "write a catalog example as a file");
    example->add_option("name", example_name)->required();
    example->add_option("params", example_params, "key=value");
    example->add_option("-o,--output", example_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*example) return out.finish(cmd_example(out, example_name, example_params, example_path));
        AlgebraFile f = read_algebra_file(file);
        if (*verify) return out.finish(cmd_verify(out, f));
        if (*homology_cmd) return out.finish(cmd_homology(out, f, ring));
        if (*radicals) return out.finish(cmd_radicals(out, f));
        if (*simples) return out.finish(cmd_simples(out, f));
        if (*hull) return out.finish(cmd_hull(out, f));
        return out.finish(cmd_classgroup(out, f, mode, idempotent));
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::UnknownExample) return kUsage;
        return e.is_resource_cap() ? kCap : kFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
}
