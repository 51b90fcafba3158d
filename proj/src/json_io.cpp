#include "hypercover/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace hypercover {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<int> int_list(const json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& x : j) out.push_back(as_int(x, what));
    return out;
}

Rational as_rational(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) bad("rational values are strings \"p/q\" or integers");
    return parse_rational(j.get<std::string>());
}

}  // namespace

json encode_point(Point p, int n) {
    json a = json::array();
    for (int i = 1; i <= n; ++i) a.push_back(coord(p, i) ? 1 : 0);
    return a;
}

Point decode_point(const json& j, int n) {
    if (!j.is_array() || static_cast<int>(j.size()) != n) bad("point must be a 0/1 array of length " + std::to_string(n));
    Point p = 0;
    for (int i = 0; i < n; ++i) {
        const int b = as_int(j[i], "point coordinate");
        if (b != 0 && b != 1) bad("point coordinates must be 0 or 1");
        if (b) p |= Point{1} << i;
    }
    return p;
}

json encode(const SymmetricSet& s) { return {{"n", s.n()}, {"weights", s.weights()}}; }

json encode(const PointSet& s) {
    json pts = json::array();
    for (Point p : s.points) pts.push_back(encode_point(p, s.n));
    return {{"n", s.n}, {"points", pts}};
}

json encode(const BlockSymmetricSet& s) {
    json t = json::array();
    for (const auto& w : s.tuples()) t.push_back(w);
    return {{"sizes", s.structure().sizes}, {"tuples", t}};
}

json encode(const Target& t) {
    return std::visit([](const auto& s) { return encode(s); }, t);
}

json encode(const OrderChoice& o) {
    json a = json::array();
    for (auto b : o) a.push_back(b == BlockOrder::ascending ? "asc" : "desc");
    return {{"orders", a}};
}

json encode(const PeripheralInterval& j) {
    return {{"n", j.n}, {"a", j.a}, {"b", j.b}, {"weights", j.as_set().weights()}};
}

json encode(const IndexWitness& w, int n) {
    std::vector<int> coords;
    for (int i = 1; i <= n; ++i)
        if (coord(w.coords, i)) coords.push_back(i);
    return {{"value", w.value}, {"point", encode_point(w.point, n)}, {"coordinates", coords}};
}

json encode(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exps", e}, {"coef", to_string(c)}});
    return {{"nvars", p.nvars()}, {"terms", terms}};
}

json encode(const HyperplaneFamily& f) {
    json hs = json::array();
    for (const auto& h : f.items) {
        json c = json::array();
        for (const auto& x : h.coeffs) c.push_back(to_string(x));
        hs.push_back({{"coeffs", c}, {"constant", to_string(h.constant)}});
    }
    return {{"nvars", f.nvars}, {"hyperplanes", hs}};
}

json encode(const Witness& w) {
    return std::visit([](const auto& x) { return encode(x); }, w);
}

json encode(const CoverSpec& s) {
    json j{{"target", encode(s.target())}, {"t", s.t()}, {"ell", s.ell()},
           {"mode", s.mode() == CoverMode::exact ? "exact" : "block-exact"}};
    if (s.mode() == CoverMode::block_exact) j["sizes"] = s.blocks().sizes;
    return j;
}

json encode(const VerificationReport& r, int n) {
    json v = json::array();
    for (const auto& x : r.violations) {
        json e{{"point", encode_point(x.point, n)}, {"kind", x.kind}, {"observed", x.observed}};
        if (x.block >= 0) e["block"] = x.block + 1;
        if (x.member >= 0) e["member"] = x.member;
        v.push_back(e);
    }
    return {{"passed", r.passed}, {"points-checked", r.points_checked}, {"violations", v}};
}

json encode(const OracleResult& r, int n) {
    json tr = json::array();
    for (const auto& e : r.transcript) {
        json x{{"bound", e.bound}, {"status", e.status}};
        if (r.kind == "ehc") {
            x["nodes"] = e.nodes;
        } else {
            x["unknowns"] = e.unknowns;
            x["rank"] = e.rank;
            x["kernel-dim"] = e.kernel_dim;
            if (e.blocked_at) x["blocked-at"] = encode_point(*e.blocked_at, n);
            if (e.blocked_block >= 0) x["blocked-block"] = e.blocked_block + 1;
        }
        tr.push_back(x);
    }
    return {{"kind", r.kind}, {"value", r.value}, {"witness", encode(r.witness)}, {"transcript", tr},
            {"verification", encode(r.check, n)}};
}

SymmetricSet decode_symmetric(const json& j) {
    return SymmetricSet(as_int(field(j, "n"), "n"), int_list(field(j, "weights"), "weights"));
}

PointSet decode_pointset(const json& j) {
    const int n = as_int(field(j, "n"), "n");
    if (n < 1 || n > 63) bad("point sets need 1 <= n <= 63");
    std::vector<Point> pts;
    for (const auto& p : field(j, "points")) pts.push_back(decode_point(p, n));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return PointSet(n, pts);
}

BlockSymmetricSet decode_block(const json& j) {
    std::set<WeightTuple> t;
    for (const auto& x : field(j, "tuples")) t.insert(int_list(x, "tuple"));
    return BlockSymmetricSet(BlockStructure(int_list(field(j, "sizes"), "sizes")), t);
}

Target decode_target(const json& j) {
    try {
        if (j.contains("sizes")) return decode_block(j);
        if (j.contains("points")) return decode_pointset(j);
        if (j.contains("weights")) return decode_symmetric(j);
    } catch (const std::domain_error& e) {
        bad(e.what());
    }
    bad("set descriptor needs \"weights\", \"points\" or \"sizes\"/\"tuples\"");
}

OrderChoice decode_order(const json& j) {
    const json& a = j.is_array() ? j : field(j, "orders");
    OrderChoice o;
    for (const auto& x : a) {
        const auto s = x.is_string() ? x.get<std::string>() : "";
        if (s == "asc") o.push_back(BlockOrder::ascending);
        else if (s == "desc") o.push_back(BlockOrder::descending);
        else bad("orders are \"asc\" or \"desc\"");
    }
    return o;
}

Polynomial decode_polynomial(const json& j) {
    const int n = as_int(field(j, "nvars"), "nvars");
    Polynomial p(n);
    for (const auto& t : field(j, "terms")) {
        auto e = int_list(field(t, "exps"), "exps");
        if (static_cast<int>(e.size()) != n) bad("exponent length differs from nvars");
        p.add_term(e, as_rational(field(t, "coef")));
    }
    return p;
}

HyperplaneFamily decode_family(const json& j) {
    const auto& hs = field(j, "hyperplanes");
    int n = j.contains("nvars") ? as_int(j["nvars"], "nvars") : -1;
    if (n < 0) {
        if (hs.empty()) bad("an empty family needs \"nvars\"");
        n = static_cast<int>(field(hs[0], "coeffs").size());
    }
    HyperplaneFamily f(n);
    for (const auto& h : hs) {
        std::vector<Rational> c;
        for (const auto& x : field(h, "coeffs")) c.push_back(as_rational(x));
        if (static_cast<int>(c.size()) != n) bad("hyperplane coefficient count differs from nvars");
        try {
            f.add(Hyperplane(c, h.contains("constant") ? as_rational(h["constant"]) : Rational(0)));
        } catch (const std::domain_error& e) {
            bad(e.what());
        }
    }
    return f;
}

Witness decode_witness(const json& j) {
    if (j.contains("hyperplanes")) return decode_family(j);
    if (j.contains("terms")) return decode_polynomial(j);
    bad("witness needs \"hyperplanes\" or \"terms\"");
}

CoverSpec decode_spec(const json& j) {
    auto target = decode_target(field(j, "target"));
    const int t = as_int(field(j, "t"), "t");
    const int ell = j.contains("ell") ? as_int(j["ell"], "ell") : 0;
    const std::string mode = j.contains("mode") ? j["mode"].get<std::string>() : "exact";
    try {
        if (mode == "exact") return CoverSpec(std::move(target), t, ell);
        if (mode != "block-exact") bad("mode is \"exact\" or \"block-exact\"");
        BlockStructure b = j.contains("sizes") ? BlockStructure(int_list(j["sizes"], "sizes"))
                           : std::holds_alternative<BlockSymmetricSet>(target)
                               ? std::get<BlockSymmetricSet>(target).structure()
                               : BlockStructure();
        if (b.sizes.empty()) bad("block-exact specs need \"sizes\"");
        return CoverSpec(std::move(target), t, ell, b);
    } catch (const std::domain_error& e) {
        bad(e.what());
    }
}

int witness_value(const Witness& w) {
    if (const auto* f = std::get_if<HyperplaneFamily>(&w)) return f->size();
    return std::get<Polynomial>(w).degree();
}

VerificationReport verify_witness(const Witness& w, const CoverSpec& spec, Execution ex) {
    return std::visit([&](const auto& x) { return verify_cover(x, spec, ex); }, w);
}

json load_json_arg(const std::string& arg) {
    std::string text = arg;
    std::error_code ec;
    if (!arg.empty() && arg.front() != '{' && arg.front() != '[' && std::filesystem::exists(arg, ec) && !std::filesystem::is_directory(arg, ec)) {
        std::ifstream in(arg);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace hypercover
