#include "hypercover/reproduce.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace hypercover;

namespace {

constexpr int kOk = 0, kUsage = 1, kVerifyFailed = 2, kDiscrepancy = 3;

struct Options {
    std::string set, spec, witness, certificate, order, input, out;
    std::string format = "json";
    std::optional<int> max_n, max_t, max_degree, max_size;
    int t = 1, n = 0, m = 0, w = 0, i = 0;
    bool literal = false, serial = false, bruteforce = false;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// A set argument may be a bare descriptor or an object carrying it under "set" or "target".
json set_json(const std::string& arg) {
    if (arg.empty()) throw std::invalid_argument("--set is required");
    auto j = load_json_arg(arg);
    if (j.contains("set")) return j["set"];
    if (j.contains("target")) return j["target"];
    return j;
}

CoverSpec load_spec(const Options& o) {
    if (o.spec.empty()) throw std::invalid_argument("--spec is required");
    auto j = load_json_arg(o.spec);
    if (j.contains("spec")) j = j["spec"];
    return decode_spec(j);
}

Witness load_witness(const std::string& arg) {
    if (arg.empty()) throw std::invalid_argument("--witness is required");
    auto j = load_json_arg(arg);
    if (j.contains("witness")) j = j["witness"];
    return decode_witness(j);
}

OracleLimits limits(const Options& o) {
    OracleLimits l;
    if (o.max_n) l.max_n = *o.max_n;
    if (o.max_t) l.max_t = *o.max_t;
    if (o.max_degree) l.max_degree = *o.max_degree;
    if (o.max_size) l.max_size = *o.max_size;
    return l;
}

int measure(const std::string& op, const Options& o) {
    const auto target = decode_target(set_json(o.set));
    if (const auto* s = std::get_if<SymmetricSet>(&target)) {
        json all{{"n", s->n()}, {"weights", s->weights()}};
        all["mu"] = mu(*s);
        all["lambda"] = lambda_measure(*s);
        all["mu-bar"] = mu_bar(*s);
        all["lambda-bar"] = lambda_bar(*s);
        all["peripheral"] = is_peripheral(*s);
        all["complement"] = encode(s->complement());
        all["transform"] = encode(complement_transform(*s));
        if (!s->empty()) {
            all["inn"] = inn_measure(*s);
            all["out"] = out_measure(*s);
        }
        if (op == "all") return emit(all), kOk;
        if (!all.contains(op)) throw std::invalid_argument("unknown measure \"" + op + "\" for a symmetric set");
        emit({{op, all[op]}});
        return kOk;
    }
    if (const auto* b = std::get_if<BlockSymmetricSet>(&target)) {
        json all{{"set", encode(*b)}, {"complement", encode(b->complement())}};
        json proj = json::array();
        for (int j = 0; j < b->structure().k(); ++j) proj.push_back(encode(b->projection(j)));
        all["projections"] = proj;
        if (auto c = pdc_check(*b)) {
            const auto e = poset_extremes(c->lattice.members, c->lattice.q);
            all["pdc"] = {{"order", encode(c->order)},
                          {"q", c->lattice.q},
                          {"innext", e.innext},
                          {"outext", e.outext},
                          {"outer-intact", outer_intact_check(*b, c->order)}};
        } else {
            all["pdc"] = nullptr;
        }
        if (op == "all") return emit(all), kOk;
        if (!all.contains(op)) throw std::invalid_argument("unknown measure \"" + op + "\" for a block set");
        emit({{op, all[op]}});
        return kOk;
    }
    throw std::invalid_argument("measures take a symmetric or block set");
}

int interval(const std::string& which, const Options& o) {
    const auto s = decode_symmetric(set_json(o.set));
    if (which == "inner") emit(encode(inner_interval(s)));
    else if (which == "outer") emit(encode(outer_interval(s)));
    else throw std::invalid_argument("interval is \"inner\" or \"outer\"");
    return kOk;
}

int index(const Options& o) {
    const auto target = decode_target(set_json(o.set));
    if (const auto* s = std::get_if<SymmetricSet>(&target)) {
        json j{{"formula", encode(index_complexity_symmetric(*s), s->n())}, {"out", out_measure(*s)}};
        if (o.bruteforce) j["bruteforce"] = encode(index_complexity_bruteforce(PointSet::of(*s)), s->n());
        emit(j);
    } else if (const auto* p = std::get_if<PointSet>(&target)) {
        emit({{"bruteforce", encode(index_complexity_bruteforce(*p), p->n)}});
    } else {
        const auto& b = std::get<BlockSymmetricSet>(target);
        OrderChoice order;
        if (!o.order.empty()) order = decode_order(load_json_arg(o.order));
        else if (auto c = pdc_check(b)) order = c->order;
        else throw std::invalid_argument("set is not PDC under any order");
        json j{{"order", encode(order)}, {"formula", block_index_complexity(b, order)}};
        if (o.bruteforce) j["bruteforce"] = index_complexity_bruteforce(PointSet(b.structure().total(), b.points())).value;
        emit(j);
    }
    return kOk;
}

int construct(const std::string& recipe, const Options& o) {
    std::optional<Witness> w;
    std::optional<CoverSpec> spec;
    json extra = json::object();
    if (recipe == "symmetric") {
        const auto s = decode_symmetric(set_json(o.set));
        w = construct_symmetric_cover(s, o.t);
        spec.emplace(s.complement(), o.t, o.t - 1);
    } else if (recipe == "grid") {
        const auto g = decode_block(set_json(o.set));
        w = construct_grid_cover(g, o.t);
        spec.emplace(g.complement(), o.t, o.t - 1, g.structure());
    } else if (recipe == "subcube-complement") {
        w = construct_subcube_complement_cover(o.n, o.m, o.t);
        std::vector<Point> pts;
        for (Point p = 0; p < (Point{1} << o.n); ++p)
            if (p >> o.m) pts.push_back(p);
        spec.emplace(PointSet(o.n, pts), o.t, o.t - 1);
    } else if (recipe == "pdc" || recipe == "grid-self") {
        const auto s = decode_block(set_json(o.set));
        PolynomialConstruction r;
        if (recipe == "grid-self") {
            r = construct_grid_self_cover(s, o.t);
            spec.emplace(s, o.t, o.t - 1, s.structure());
        } else {
            OrderChoice order;
            if (!o.order.empty()) order = decode_order(load_json_arg(o.order));
            else if (auto c = pdc_check(s)) order = c->order;
            else throw std::invalid_argument("set is not PDC under any order");
            r = construct_pdc_polynomial_cover(s, order, o.t, o.literal ? PdcVariant::literal_outext : PdcVariant::innext);
            spec.emplace(s.complement(), o.t, o.t - 1, s.structure());
            extra["order"] = encode(order);
        }
        extra["formula-degree"] = r.formula_degree;
        extra["scalar-base"] = r.scalar_base;
        w = r.poly;
    } else if (recipe == "hamming") {
        std::vector<Point> base_pts;
        for (Point p = 0; p + 1 < (Point{1} << o.w); ++p) base_pts.push_back(p);
        const auto base = epc_oracle(CoverSpec(PointSet(o.w, base_pts), o.t, 0), limits(o));
        w = construct_hamming_ball_cover(o.n, o.w, o.t, std::get<Polynomial>(base.witness));
        std::vector<int> ws;
        for (int x = 0; x < o.w; ++x) ws.push_back(x);
        spec.emplace(SymmetricSet(o.n, ws), o.t, 0);
    } else if (recipe == "layer") {
        w = construct_layer_power_cover(o.n, o.w, o.t);
        spec.emplace(SymmetricSet(o.n, {o.w}), o.t, 0);
    } else if (recipe == "vanishing") {
        const auto s = decode_symmetric(set_json(o.set));
        w = vanishing_family(s);
        spec.emplace(s, 1, 0);
    } else if (recipe == "hstar") {
        w = family_Hstar(o.n, o.i);
    } else if (recipe == "lift" || recipe == "restrict") {
        const auto f = load_witness(o.witness);
        if (!std::holds_alternative<HyperplaneFamily>(f)) throw std::invalid_argument("lift and restrict take hyperplane families");
        const auto& fam = std::get<HyperplaneFamily>(f);
        if (recipe == "lift") {
            w = lift_subcube_cover(fam, o.m);
        } else {
            auto r = restrict_subcube_cover(fam, o.m);
            extra["collapsed"] = r.collapsed;
            w = std::move(r.family);
        }
    } else {
        throw std::invalid_argument("unknown recipe \"" + recipe + "\"");
    }
    json out{{"witness", encode(*w)}, {"value", witness_value(*w)}};
    out.update(extra);
    int code = kOk;
    if (spec) {
        const auto rep = verify_witness(*w, *spec);
        out["spec"] = encode(*spec);
        out["verification"] = encode(rep, spec->nvars());
        if (!rep.passed) code = kVerifyFailed;
    }
    emit(out);
    return code;
}

int verify(const Options& o) {
    if (!o.certificate.empty()) {
        auto j = load_json_arg(o.certificate);
        std::vector<json> certs;
        if (j.is_array()) certs.assign(j.begin(), j.end());
        else if (j.contains("certificates")) certs.assign(j["certificates"].begin(), j["certificates"].end());
        else certs.push_back(j);
        json results = json::array();
        bool ok = true, discrepancy = false;
        for (const auto& c : certs) {
            const auto r = recheck_certificate(c);
            json checks = json::array();
            for (const auto& k : r.checks) checks.push_back({{"name", k.name}, {"passed", k.passed}, {"detail", k.detail}});
            results.push_back({{"suite", c.at("suite")}, {"claim", c.at("claim")}, {"passed", r.passed}, {"checks", checks},
                               {"status", c.at("status")}});
            ok = ok && r.passed;
            discrepancy = discrepancy || (c.at("status") == "discrepancy" && !quarantined(c.at("suite")));
        }
        emit({{"rechecked", results.size()}, {"passed", ok}, {"results", results}});
        return !ok ? kVerifyFailed : discrepancy ? kDiscrepancy : kOk;
    }
    const auto spec = load_spec(o);
    const auto w = load_witness(o.witness);
    const auto rep = verify_witness(w, spec, o.serial ? Execution::serial : Execution::parallel);
    emit({{"value", witness_value(w)}, {"verification", encode(rep, spec.nvars())}});
    return rep.passed ? kOk : kVerifyFailed;
}

int oracle(const std::string& kind, const Options& o) {
    const auto spec = load_spec(o);
    OracleResult r;
    if (kind == "epc") r = epc_oracle(spec, limits(o));
    else if (kind == "bepc") r = bepc_oracle(spec, limits(o));
    else if (kind == "ehc") r = ehc_oracle(spec, limits(o), o.serial ? Execution::serial : Execution::parallel);
    else throw std::invalid_argument("oracle is epc, bepc or ehc");
    emit(encode(r, spec.nvars()));
    return r.check.passed ? kOk : kVerifyFailed;
}

int run_reproduce(const std::string& suite, const Options& o) {
    ReproduceBounds b;
    b.max_n = o.max_n;
    b.max_t = o.max_t;
    if (o.max_degree) b.oracle.max_degree = *o.max_degree;
    if (o.max_size) b.oracle.max_size = *o.max_size;
    std::vector<Certificate> certs;
    if (suite == "all") {
        for (const auto& s : suite_names()) {
            auto c = reproduce(s, b);
            certs.insert(certs.end(), c.begin(), c.end());
        }
    } else {
        certs = reproduce(suite, b);
    }
    const auto text = render_report(certs, o.format);
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream(o.out) << text;
    }
    const bool bad = std::any_of(certs.begin(), certs.end(),
                                 [](const Certificate& c) { return c.status == Status::discrepancy && !quarantined(c.suite); });
    return bad ? kDiscrepancy : kOk;
}

int report(const Options& o) {
    if (o.input.empty()) throw std::invalid_argument("--input is required");
    auto j = load_json_arg(o.input);
    const json& list = j.is_array() ? j : j.at("certificates");
    std::vector<Certificate> certs;
    for (const auto& c : list) certs.push_back(decode_certificate(c));
    std::cout << render_report(certs, o.format);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hyperplane and polynomial covers of symmetric subsets of the hypercube"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--max-n", o.max_n, "Dimension bound for oracles and sweeps");
    app.add_option("--max-t", o.max_t, "Multiplicity bound for oracles and sweeps");
    app.add_option("--format", o.format, "Output format for reports")->check(CLI::IsMember({"json", "table"}));

    std::string op = "all", which, recipe, kind, suite;
    auto* m = app.add_subcommand("measure", "Combinatorial measures of a symmetric or block set");
    m->add_option("op", op, "mu, lambda, mu-bar, lambda-bar, inn, out, peripheral, complement, transform, pdc, all");
    m->add_option("--set", o.set, "Set descriptor (file or inline JSON)")->required();

    auto* iv = app.add_subcommand("interval", "Inner or outer peripheral interval");
    iv->add_option("which", which, "inner or outer")->required();
    iv->add_option("--set", o.set)->required();

    auto* ix = app.add_subcommand("index", "Index complexity");
    ix->add_option("--set", o.set)->required();
    ix->add_option("--order", o.order, "Block order choice for block sets");
    ix->add_flag("--bruteforce", o.bruteforce, "Also run the exhaustive search");

    auto* c = app.add_subcommand("construct", "Build a cover from a recipe and verify it");
    c->add_option("recipe", recipe, "symmetric, grid, subcube-complement, pdc, grid-self, hamming, layer, vanishing, hstar, lift, restrict")
        ->required();
    c->add_option("--set", o.set);
    c->add_option("--t", o.t, "Target multiplicity")->check(CLI::PositiveNumber);
    c->add_option("--n", o.n);
    c->add_option("--m", o.m);
    c->add_option("--w", o.w);
    c->add_option("--i", o.i);
    c->add_option("--order", o.order);
    c->add_option("--witness", o.witness);
    c->add_flag("--literal", o.literal, "Use the printed outext form of the PDC formula");

    auto* v = app.add_subcommand("verify", "Verify a witness against a spec, or recheck certificates");
    v->add_option("--witness", o.witness);
    v->add_option("--spec", o.spec);
    v->add_option("--certificate", o.certificate);
    v->add_flag("--serial", o.serial, "Use the serial verifier");

    auto* orc = app.add_subcommand("oracle", "Exact minimum degree or size");
    orc->add_option("kind", kind, "epc, bepc or ehc")->required();
    orc->add_option("--spec", o.spec)->required();
    orc->add_option("--max-degree", o.max_degree);
    orc->add_option("--max-size", o.max_size);
    orc->add_flag("--serial", o.serial, "Run the ehc search on one thread");

    auto* rp = app.add_subcommand("reproduce", "Regenerate a theorem suite as certificates");
    rp->add_option("suite", suite, "Suite name or \"all\"")->required();
    rp->add_option("--out", o.out, "Write the report to a file");
    rp->add_option("--max-degree", o.max_degree);
    rp->add_option("--max-size", o.max_size);

    auto* rep = app.add_subcommand("report", "Render certificates as a table or JSON");
    rep->add_option("--input", o.input)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    try {
        if (*m) return measure(op, o);
        if (*iv) return interval(which, o);
        if (*ix) return index(o);
        if (*c) return construct(recipe, o);
        if (*v) return verify(o);
        if (*orc) return oracle(kind, o);
        if (*rp) {
            if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
                throw std::invalid_argument("unknown suite \"" + suite + "\"");
            return run_reproduce(suite, o);
        }
        if (*rep) return report(o);
    } catch (const OracleRefusal& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
