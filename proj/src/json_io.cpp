#include "solenoid/json_io.hpp"

#include <chrono>
#include <cmath>
#include <ctime>

namespace solenoid {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw std::invalid_argument("expected an object with field \"" +
                                                    std::string(key) + "\"; got " + j.dump());
    auto it = j.find(key);
    if (it == j.end())
        throw std::invalid_argument("missing field \"" + std::string(key) + "\" in " + j.dump());
    return *it;
}

std::string expect_string(const Json& j, const char* what) {
    if (!j.is_string())
        throw std::invalid_argument(std::string(what) + " must be a string; got " + j.dump());
    return j.get<std::string>();
}

const Json& expect_array(const Json& j, const char* what) {
    if (!j.is_array())
        throw std::invalid_argument(std::string(what) + " must be an array; got " + j.dump());
    return j;
}

Int int_from_string(const std::string& s, const char* what) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": not an integer: \"" + s + "\"");
    }
}

}  // namespace

Json rational_json(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Int(j.get<long long>()));
    throw std::invalid_argument("rational must be a \"p/q\" string or an integer; got " +
                                j.dump());
}

Json int_json(const Int& v) {
    static const Int window = Int(1) << 53;
    if (abs(v) <= window) return Json(static_cast<long long>(v));
    return Json(v.str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return int_from_string(j.get<std::string>(), "integer field");
    throw std::invalid_argument("integer must be a number or decimal string; got " + j.dump());
}

Json profile_json(const PrimeProfile& p) {
    Json primes = Json::object();
    for (const auto& [prime, mult] : p.entries()) {
        if (mult.is_unbounded)
            primes[prime.str()] = "inf";
        else
            primes[prime.str()] = mult.count;
    }
    return Json{{"primes", primes}};
}

PrimeProfile profile_from_json(const Json& j) {
    const Json& primes = field(j, "primes");
    if (!primes.is_object())
        throw std::invalid_argument("\"primes\" must be an object; got " + primes.dump());
    PrimeProfile out;
    for (auto it = primes.begin(); it != primes.end(); ++it) {
        Int prime = int_from_string(it.key(), "prime");
        const Json& v = it.value();
        if (v.is_string() && v.get<std::string>() == "inf") {
            out.set(prime, PrimeProfile::Multiplicity::unbounded());
        } else if (v.is_number_integer()) {
            long long c = v.get<long long>();
            if (c < 1)
                throw std::invalid_argument("multiplicity of " + prime.str() +
                                            " must be >= 1 or \"inf\"");
            out.set(prime, PrimeProfile::Multiplicity::finite(static_cast<int>(c)));
        } else {
            throw std::invalid_argument("multiplicity must be a count or \"inf\"; got " +
                                        v.dump());
        }
    }
    return out;
}

Json aadic_json(const AadicInteger& x) {
    Json base = Json::array(), digits = Json::array();
    for (const Int& b : x.base()) base.push_back(int_json(b));
    for (const Int& d : x.digits()) digits.push_back(int_json(d));
    return Json{{"base", base}, {"digits", digits}};
}

AadicInteger aadic_from_json(const Json& j) {
    std::vector<Int> base, digits;
    for (const Json& b : expect_array(field(j, "base"), "\"base\"")) base.push_back(int_from_json(b));
    for (const Json& d : expect_array(field(j, "digits"), "\"digits\""))
        digits.push_back(int_from_json(d));
    return AadicInteger(std::move(base), std::move(digits));
}

Json group_json(const GroupTag& g) {
    switch (g.kind()) {
        case GroupTag::Kind::RationalGroup:
            return Json{{"kind", "rationalGroup"}, {"profile", profile_json(g.profile())}};
        case GroupTag::Kind::Torsion: {
            Json primes = Json::array();
            for (const Int& p : g.torsion_primes()) primes.push_back(int_json(p));
            return Json{{"kind", "torsionProduct"}, {"primes", primes}};
        }
        case GroupTag::Kind::Cyclic:
            return Json{{"kind", "cyclic"}, {"order", int_json(g.cyclic_order())}};
    }
    throw std::invalid_argument("unreachable group kind");
}

GroupTag group_from_json(const Json& j) {
    std::string kind = expect_string(field(j, "kind"), "group \"kind\"");
    if (kind == "rationalGroup") return GroupTag::rational_group(profile_from_json(field(j, "profile")));
    if (kind == "torsionProduct") {
        std::vector<Int> primes;
        for (const Json& p : expect_array(field(j, "primes"), "\"primes\""))
            primes.push_back(int_from_json(p));
        return GroupTag::torsion_product(std::move(primes));
    }
    if (kind == "cyclic") return GroupTag::cyclic(int_from_json(field(j, "order")));
    throw std::invalid_argument("unknown group kind: " + kind);
}

Json subgroup_json(const SubgroupSpec& s) {
    Json floors = Json::object();
    for (const auto& [prime, floor] : s.floors()) {
        if (floor)
            floors[prime.str()] = *floor;
        else
            floors[prime.str()] = "-inf";
    }
    return Json{{"host", group_json(s.host())}, {"floors", floors}};
}

SubgroupSpec subgroup_from_json(const Json& j) {
    GroupTag host = group_from_json(field(j, "host"));
    const Json& floors = field(j, "floors");
    if (!floors.is_object())
        throw std::invalid_argument("\"floors\" must be an object; got " + floors.dump());
    std::map<Int, std::optional<int>> out;
    for (auto it = floors.begin(); it != floors.end(); ++it) {
        Int prime = int_from_string(it.key(), "prime");
        const Json& v = it.value();
        if (v.is_string() && v.get<std::string>() == "-inf")
            out[prime] = std::nullopt;
        else if (v.is_number_integer())
            out[prime] = static_cast<int>(v.get<long long>());
        else
            throw std::invalid_argument("floor must be an integer or \"-inf\"; got " + v.dump());
    }
    return SubgroupSpec::from_floors(std::move(host), std::move(out));
}

Json charfn_json(const CharFnExpr& f) {
    switch (f.kind()) {
        case NodeKind::Gaussian:
            return Json{{"kind", "gaussian"},
                        {"host", group_json(f.host())},
                        {"lambda", rational_json(f.data<CharFnExpr::GaussianData>().lambda)}};
        case NodeKind::SubgroupIndicator:
            return Json{{"kind", "subgroupIndicator"},
                        {"subgroup", subgroup_json(f.data<CharFnExpr::IndicatorData>().subgroup)}};
        case NodeKind::CosetPiecewise: {
            const auto& d = f.data<CharFnExpr::CosetPiecewiseData>();
            Json pieces = Json::array();
            for (const auto& [rep, value] : d.pieces)
                pieces.push_back(Json::array({rational_json(rep.value), rational_json(value)}));
            return Json{{"kind", "cosetPiecewise"},
                        {"outer", subgroup_json(d.outer)},
                        {"inner", subgroup_json(d.inner)},
                        {"pieces", pieces}};
        }
        case NodeKind::TorsionExtension: {
            const auto& d = f.data<CharFnExpr::TorsionExtensionData>();
            Json table = Json::object();
            for (const auto& [rep, value] : d.table)
                table[format_rational(rep)] = rational_json(value);
            return Json{{"kind", "torsionExtension"},
                        {"host", group_json(f.host())},
                        {"order", int_json(d.order)},
                        {"table", table}};
        }
        case NodeKind::Pullback: {
            const auto& d = f.data<CharFnExpr::PullbackData>();
            Json table = Json::array();
            for (const Rational& v : d.table) table.push_back(rational_json(v));
            return Json{{"kind", "pullback"},
                        {"outer", subgroup_json(d.outer)},
                        {"scaled", subgroup_json(d.scaled)},
                        {"table", table}};
        }
        case NodeKind::Product: {
            Json children = Json::array();
            for (const CharFnExpr& c : f.data<CharFnExpr::ProductData>().children)
                children.push_back(charfn_json(c));
            return Json{{"kind", "product"}, {"children", children}};
        }
        case NodeKind::Mixture: {
            const auto& d = f.data<CharFnExpr::MixtureData>();
            Json weights = Json::array(), children = Json::array();
            for (const Rational& w : d.weights) weights.push_back(rational_json(w));
            for (const CharFnExpr& c : d.children) children.push_back(charfn_json(c));
            return Json{{"kind", "mixture"}, {"weights", weights}, {"children", children}};
        }
        case NodeKind::Conjugate:
            return Json{{"kind", "conjugate"},
                        {"child", charfn_json(f.data<CharFnExpr::ConjugateData>().child.front())}};
        case NodeKind::Shift: {
            const auto& d = f.data<CharFnExpr::ShiftData>();
            Json point{{"t", rational_json(d.point.t)}};
            point["d"] = d.point.d ? aadic_json(*d.point.d) : Json(nullptr);
            return Json{{"kind", "shift"},
                        {"point", point},
                        {"child", charfn_json(d.child.front())}};
        }
    }
    throw std::invalid_argument("unreachable node kind");
}

CharFnExpr charfn_from_json(const Json& j) {
    std::string kind = expect_string(field(j, "kind"), "node \"kind\"");
    if (kind == "gaussian")
        return CharFnExpr::gaussian(group_from_json(field(j, "host")),
                                    rational_from_json(field(j, "lambda")));
    if (kind == "subgroupIndicator")
        return CharFnExpr::indicator(subgroup_from_json(field(j, "subgroup")));
    if (kind == "cosetPiecewise") {
        SubgroupSpec outer = subgroup_from_json(field(j, "outer"));
        SubgroupSpec inner = subgroup_from_json(field(j, "inner"));
        std::vector<std::pair<DualElement, Rational>> pieces;
        for (const Json& p : expect_array(field(j, "pieces"), "\"pieces\"")) {
            if (!p.is_array() || p.size() != 2)
                throw std::invalid_argument("each piece must be [representative, value]");
            pieces.emplace_back(DualElement(rational_from_json(p[0]), outer.host()),
                                rational_from_json(p[1]));
        }
        return CharFnExpr::coset_piecewise(std::move(outer), std::move(inner), std::move(pieces));
    }
    if (kind == "torsionExtension") {
        GroupTag host = group_from_json(field(j, "host"));
        Int order = int_from_json(field(j, "order"));
        const Json& table = field(j, "table");
        if (!table.is_object())
            throw std::invalid_argument("\"table\" must be an object; got " + table.dump());
        std::map<Rational, Rational> entries;
        for (auto it = table.begin(); it != table.end(); ++it)
            entries[parse_rational(it.key())] = rational_from_json(it.value());
        return CharFnExpr::torsion_extension(std::move(host), order, std::move(entries));
    }
    if (kind == "pullback") {
        SubgroupSpec outer = subgroup_from_json(field(j, "outer"));
        SubgroupSpec scaled = subgroup_from_json(field(j, "scaled"));
        std::vector<Rational> table;
        for (const Json& v : expect_array(field(j, "table"), "\"table\""))
            table.push_back(rational_from_json(v));
        return CharFnExpr::pullback(std::move(outer), std::move(scaled), std::move(table));
    }
    if (kind == "product") {
        std::vector<CharFnExpr> children;
        for (const Json& c : expect_array(field(j, "children"), "\"children\""))
            children.push_back(charfn_from_json(c));
        return CharFnExpr::product(std::move(children));
    }
    if (kind == "mixture") {
        std::vector<Rational> weights;
        std::vector<CharFnExpr> children;
        for (const Json& w : expect_array(field(j, "weights"), "\"weights\""))
            weights.push_back(rational_from_json(w));
        for (const Json& c : expect_array(field(j, "children"), "\"children\""))
            children.push_back(charfn_from_json(c));
        return CharFnExpr::mixture(std::move(weights), std::move(children));
    }
    if (kind == "conjugate") return CharFnExpr::conjugate(charfn_from_json(field(j, "child")));
    if (kind == "shift") {
        const Json& point = field(j, "point");
        SolenoidPoint x(rational_from_json(field(point, "t")));
        const Json& d = field(point, "d");
        if (!d.is_null()) x.d = aadic_from_json(d);
        return CharFnExpr::shift(std::move(x), charfn_from_json(field(j, "child")));
    }
    throw std::invalid_argument("unknown node kind: " + kind);
}

Json equation_json(const EquationSpec& eq) {
    auto side = [](const std::vector<EquationTerm>& terms) {
        Json out = Json::array();
        for (const EquationTerm& t : terms)
            out.push_back(Json{{"fn", t.fn},
                               {"u", int_json(t.u_coeff)},
                               {"v", int_json(t.v_coeff)}});
        return out;
    };
    return Json{{"name", eq.name}, {"lhs", side(eq.lhs)}, {"rhs", side(eq.rhs)}};
}

EquationSpec equation_from_json(const Json& j) {
    auto side = [&](const Json& arr, const char* what) {
        std::vector<EquationTerm> out;
        for (const Json& t : expect_array(arr, what)) {
            int fn = static_cast<int>(int_from_json(field(t, "fn")));
            if (fn != 0 && fn != 1)
                throw std::invalid_argument("term \"fn\" must be 0 or 1");
            out.push_back(
                {fn, int_from_json(field(t, "u")), int_from_json(field(t, "v"))});
        }
        return out;
    };
    return {expect_string(field(j, "name"), "\"name\""), side(field(j, "lhs"), "\"lhs\""),
            side(field(j, "rhs"), "\"rhs\"")};
}

Json forms_json(const FormPair& forms) {
    return Json{{"a1", int_json(forms.a1)},
                {"a2", int_json(forms.a2)},
                {"b1", int_json(forms.b1)},
                {"b2", int_json(forms.b2)}};
}

FormPair forms_from_json(const Json& j) {
    return {int_from_json(field(j, "a1")), int_from_json(field(j, "a2")),
            int_from_json(field(j, "b1")), int_from_json(field(j, "b2"))};
}

Json grid_json(const GridSpec& g) {
    switch (g.kind) {
        case GridSpec::Kind::TorsionTruncation:
            return Json{{"kind", "truncation"}, {"level", g.level}};
        case GridSpec::Kind::RationalBox:
            return Json{{"kind", "box"}, {"den", int_json(g.box_den)}, {"max", int_json(g.box_max)}};
        case GridSpec::Kind::Explicit: {
            Json points = Json::array();
            for (const Rational& p : g.points) points.push_back(rational_json(p));
            return Json{{"kind", "explicit"}, {"points", points}};
        }
    }
    throw std::invalid_argument("unreachable grid kind");
}

GridSpec grid_from_json(const Json& j) {
    std::string kind = expect_string(field(j, "kind"), "grid \"kind\"");
    if (kind == "truncation") {
        Int level = int_from_json(field(j, "level"));
        if (level < 0 || level > 24) throw std::invalid_argument("truncation level out of range");
        return GridSpec::truncation(static_cast<int>(level));
    }
    if (kind == "box")
        return GridSpec::box(int_from_json(field(j, "den")), int_from_json(field(j, "max")));
    if (kind == "explicit") {
        std::vector<Rational> points;
        for (const Json& p : expect_array(field(j, "points"), "\"points\""))
            points.push_back(rational_from_json(p));
        return GridSpec::explicit_points(std::move(points));
    }
    throw std::invalid_argument("unknown grid kind: " + kind);
}

Json model_json(const FiniteModel& m) { return Json{{"Z", Json::array({int_json(m.order)})}}; }

FiniteModel model_from_json(const Json& j) {
    std::vector<Int> orders;
    for (const Json& n : expect_array(field(j, "Z"), "\"Z\"")) orders.push_back(int_from_json(n));
    return FiniteModel::from_orders(orders);
}

Json value_json(const CFValue& v) {
    if (v.is_exact())
        return Json{{"exact", true},
                    {"coeff", rational_json(v.coeff())},
                    {"phaseTurns", rational_json(v.phase().turns())},
                    {"exponent", rational_json(v.exponent())}};
    return Json{{"exact", false}, {"re", v.approx().real()}, {"im", v.approx().imag()}};
}

Json witness_json(const Witness& w) {
    return Json{{"u", rational_json(w.u)},
                {"v", rational_json(w.v)},
                {"lhs", w.lhs},
                {"rhs", w.rhs}};
}

Json verification_json(const VerificationReport& r) {
    Json out{{"verdict", verdict_name(r.verdict)},
             {"pairsChecked", r.pairs_checked},
             {"exactPairs", r.exact_pairs},
             {"tolerance", r.tolerance},
             {"note", r.note}};
    out["witness"] = r.witness ? witness_json(*r.witness) : Json(nullptr);
    return out;
}

Json implication_json(const ImplicationReport& r) {
    return Json{{"premise", verdict_name(r.premise)},
                {"consequences", verdict_name(r.consequences)},
                {"note", r.note}};
}

Json classification_json(const Classification& c) {
    return Json{{"class", class_name(c.cls)}, {"note", c.note}};
}

Json model_report_json(const ModelReport& r) {
    Json out{{"verdict", verdict_name(r.verdict)}, {"pairsChecked", r.pairs_checked}};
    out["witness"] = r.witness ? Json{{"u", int_json(r.witness->first)},
                                      {"v", int_json(r.witness->second)}}
                               : Json(nullptr);
    return out;
}

Json enumeration_json(const EnumerationReport& r) {
    Json out{{"symmetric", r.symmetric}};
    out["witness"] = r.witness ? Json{{"h", int_json(r.witness->first)},
                                      {"g", int_json(r.witness->second)}}
                               : Json(nullptr);
    return out;
}

Json crossvalidation_json(const CrossValidation& cv) {
    return Json{{"equation", verdict_name(cv.equation)},
                {"enumerationSymmetric", cv.enumeration_symmetric},
                {"agree", cv.agree}};
}

Json construction_json(const ConstructionResult& r) {
    Json points = Json::array();
    for (const Rational& p : r.class_points) points.push_back(rational_json(p));
    return Json{{"family", r.family},
                {"host", group_json(r.host)},
                {"mu1", charfn_json(r.mu1)},
                {"mu2", charfn_json(r.mu2)},
                {"equation", equation_json(r.equation)},
                {"forms", forms_json(r.forms)},
                {"expected", verdict_name(r.expected)},
                {"expectedClass1", class_name(r.expected_class1)},
                {"expectedClass2", class_name(r.expected_class2)},
                {"classPoints", points},
                {"note", r.note}};
}

Json pmf_json(const PMF& p) {
    Json out = Json::array();
    for (const Rational& w : p) out.push_back(rational_json(w));
    return out;
}

Json make_report(const std::string& command, Json config, Json result) {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char stamp[32];
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return Json{{"command", command},
                {"config", std::move(config)},
                {"result", std::move(result)},
                {"meta", Json{{"timestamp", stamp}}}};
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace solenoid
