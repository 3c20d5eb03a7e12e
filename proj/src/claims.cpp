#include "qseries/claims.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"

namespace qseries {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& id, const std::string& what) {
    throw CatalogError("claim '" + id + "': " + what);
}

template <typename T>
T field(const json& j, const char* key, const std::string& id) {
    if (!j.contains(key)) bad(id, std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        bad(id, std::string("field '") + key + "': " + e.what());
    }
}

std::string bound_text(const json& v, const std::string& id) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long>());
    bad(id, "range bounds must be strings or integers");
}

bool is_exponent_param(const std::string& name) { return name == "alpha" || name == "beta" || name == "gamma"; }

CongruenceClaim parse_claim(const json& j) {
    CongruenceClaim c;
    c.id = j.contains("id") && j["id"].is_string() ? j["id"].get<std::string>() : "";
    if (c.id.empty()) throw CatalogError("claim record without a string id");
    c.group = field<std::string>(j, "group", c.id);
    c.core = j.value("core", false);
    try {
        c.spec = RegularOverpartitionSpec::parse(field<std::string>(j, "spec", c.id));
    } catch (const std::invalid_argument& e) {
        bad(c.id, e.what());
    }
    c.modulus = field<std::uint64_t>(j, "modulus", c.id);
    if (c.modulus < 2 || c.modulus > 64 || (c.modulus & (c.modulus - 1)) != 0) {
        bad(c.id, "modulus must be a power of 2 in [2, 64], got " + std::to_string(c.modulus));
    }
    try {
        c.argument = ArgumentMap::parse(field<std::string>(j, "argument", c.id));
    } catch (const ArgumentParseError& e) {
        bad(c.id, e.what());
    }

    const json& rhs = j.contains("rhs") ? j["rhs"] : json();
    if (rhs.is_string() && rhs.get<std::string>() == "0") {
        c.rhs = std::nullopt;
    } else if (rhs.is_object()) {
        RhsTerm t;
        t.scalar = rhs.value("scalar", 1L);
        t.shift = rhs.value("shift", std::size_t{0});
        try {
            t.eta = EtaQuotient::parse(field<std::string>(rhs, "eta", c.id));
        } catch (const EtaParseError& e) {
            bad(c.id, e.what());
        }
        c.rhs = t;
    } else {
        bad(c.id, "rhs must be \"0\" or {scalar, shift, eta}");
    }

    if (j.contains("params")) {
        for (const json& p : j["params"]) {
            ParamDomain d;
            d.name = field<std::string>(p, "name", c.id);
            if (d.name == "n") bad(c.id, "'n' cannot be a parameter");
            if (p.contains("values")) {
                d.values = field<std::vector<long>>(p, "values", c.id);
                if (d.values.empty()) bad(c.id, "parameter '" + d.name + "' has no values");
            } else if (p.contains("from") && p.contains("to")) {
                d.range = std::make_pair(bound_text(p["from"], c.id), bound_text(p["to"], c.id));
            } else {
                bad(c.id, "parameter '" + d.name + "' needs 'values' or 'from'/'to'");
            }
            c.params.push_back(std::move(d));
        }
    }
    for (const std::string& name : c.argument.parameters()) {
        const bool declared = std::any_of(c.params.begin(), c.params.end(),
                                          [&](const ParamDomain& d) { return d.name == name; });
        if (!declared) bad(c.id, "argument uses undeclared parameter '" + name + "'");
    }
    if (j.contains("legendre")) {
        const json& l = j["legendre"];
        LegendreFilter f;
        f.param = l.value("param", std::string("p"));
        f.a = field<long>(l, "a", c.id);
        f.value = field<int>(l, "value", c.id);
        c.legendre = f;
    }
    if (j.contains("n_max")) c.n_max = field<std::size_t>(j, "n_max", c.id);
    c.note = j.value("note", std::string());
    return c;
}

}  // namespace

std::string RhsTerm::to_string() const {
    std::string s = std::to_string(scalar);
    if (shift == 1) s += " * q";
    if (shift > 1) s += " * q^" + std::to_string(shift);
    if (!eta.empty()) s += " * " + eta.to_string();
    return s;
}

Assignment to_assignment(const ParamTuple& tuple) { return Assignment(tuple.begin(), tuple.end()); }

std::string to_string(const ParamTuple& tuple) {
    std::string s;
    for (const auto& [name, value] : tuple) {
        if (!s.empty()) s += ",";
        s += name + "=" + std::to_string(value);
    }
    return s.empty() ? "-" : s;
}

std::string CongruenceClaim::statement() const {
    return "p_{" + spec.to_string() + "}(" + argument.text() + ") = " + (rhs ? rhs->to_string() : "0") + " (mod " +
           std::to_string(modulus) + ")";
}

std::vector<ParamTuple> enumerate_params(const CongruenceClaim& claim, const ParamBounds& bounds) {
    std::vector<ParamTuple> out;
    ParamTuple current;
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (i == claim.params.size()) {
            out.push_back(current);
            return;
        }
        const ParamDomain& d = claim.params[i];
        std::vector<long> values = d.values;
        if (d.range) {
            const Assignment env = to_assignment(current);
            values.clear();
            const long lo = evaluate_expression(d.range->first, env);
            const long hi = evaluate_expression(d.range->second, env);
            for (long v = lo; v <= hi; ++v) values.push_back(v);
        }
        if (bounds.max_exponent && is_exponent_param(d.name)) {
            values.clear();
            for (long v = 0; v <= *bounds.max_exponent; ++v) values.push_back(v);
        }
        if (bounds.primes && d.name == "p") values = *bounds.primes;
        for (long v : values) {
            current.emplace_back(d.name, v);
            walk(i + 1);
            current.pop_back();
        }
    };
    walk(0);
    return out;
}

ClaimCatalog ClaimCatalog::from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw CatalogError(std::string("catalogue is not valid JSON: ") + e.what());
    }
    if (!doc.contains("claims") || !doc["claims"].is_array()) throw CatalogError("catalogue needs a 'claims' array");
    ClaimCatalog catalog;
    for (const json& record : doc["claims"]) catalog.add(parse_claim(record));
    return catalog;
}

const ClaimCatalog& ClaimCatalog::standard() {
    static const ClaimCatalog catalog = from_json(embedded_catalog_json());
    return catalog;
}

const CongruenceClaim& ClaimCatalog::find(const std::string& id) const {
    auto it = std::find_if(claims_.begin(), claims_.end(), [&](const CongruenceClaim& c) { return c.id == id; });
    if (it == claims_.end()) throw UnknownClaim("unknown claim id '" + id + "'");
    return *it;
}

bool ClaimCatalog::contains(const std::string& id) const {
    return std::any_of(claims_.begin(), claims_.end(), [&](const CongruenceClaim& c) { return c.id == id; });
}

void ClaimCatalog::add(CongruenceClaim claim) {
    if (contains(claim.id)) throw CatalogError("duplicate claim id '" + claim.id + "'");
    claims_.push_back(std::move(claim));
}

std::vector<const CongruenceClaim*> ClaimCatalog::select(const std::string& glob, const std::string& group) const {
    std::vector<const CongruenceClaim*> out;
    for (const CongruenceClaim& c : claims_) {
        if (!group.empty() && c.group != group) continue;
        if (glob_match(glob, c.id)) out.push_back(&c);
    }
    return out;
}

bool glob_match(const std::string& pattern, const std::string& text) {
    std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

}  // namespace qseries
