#include "acfq/serialize.hpp"

#include <sstream>

namespace acfq {

using nlohmann::json;

json to_json(const DichotomyReport& r) {
    json j;
    j["q"] = r.q;
    j["subset"] = r.subset;
    j["slope_set"] = r.slope_set;
    j["covers"] = r.covers;
    if (r.injection_slope) {
        j["injection_slope"] = *r.injection_slope;
        j["injection_verified"] = r.injection_verified;
        j["pairs_checked"] = r.pairs_checked;
    }
    return j;
}

json to_json(const DimResult& r) {
    json j;
    j["dim"] = r.dim;
    json cert = json::array();
    for (const auto& c : r.certificate) {
        json e;
        e["level"] = c.level;
        e["coordinate"] = c.coordinate;
        e["holds"] = c.holds;
        e["sentence"] = c.sentence;
        cert.push_back(e);
    }
    j["certificate"] = cert;
    return j;
}

json to_json(const BoundingSet& b) {
    json j;
    j["fiber_var"] = b.fiber_var;
    json ws = json::array();
    for (const auto& w : b.witnesses) ws.push_back(w.to_string());
    j["witnesses"] = ws;
    j["uniform_bound"] = b.uniform_bound;
    return j;
}

json to_json(const FrobeniusReport& r) {
    json j;
    j["p"] = r.prime;
    j["degree_bound"] = r.degree_bound;
    j["functions"] = r.functions;
    j["pairs_checked"] = r.pairs_checked;
    j["collisions"] = r.collisions;
    return j;
}

json to_json(const InfiniteResult& r) {
    json j;
    j["decided"] = r.decided;
    if (r.decided) j["infinite"] = r.value;
    j["criterion"] = print_formula(r.criterion);
    return j;
}

std::string render_text(const DichotomyReport& r, const FqField& field) {
    std::ostringstream os;
    auto show = [&field](unsigned long long i) { return field.element(i).to_string(); };
    os << "subset of F_" << r.q << ": {";
    for (std::size_t i = 0; i < r.subset.size(); ++i) os << (i ? ", " : "") << show(r.subset[i]);
    os << "}\n";
    os << "slope set (" << r.slope_set.size() << " of " << r.q << "): {";
    for (std::size_t i = 0; i < r.slope_set.size(); ++i)
        os << (i ? ", " : "") << show(r.slope_set[i]);
    os << "}\n";
    if (r.covers) {
        os << "slopes cover the field\n";
    } else {
        os << "injection slope a = " << show(*r.injection_slope) << "; (x,y) -> a*x + y "
           << (r.injection_verified ? "verified injective" : "NOT injective") << " on "
           << r.pairs_checked << " pairs\n";
    }
    return os.str();
}

std::string render_text(const DimResult& r) {
    std::ostringstream os;
    os << "dim = " << r.dim << "\n";
    for (const auto& c : r.certificate) {
        if (c.coordinate.empty())
            os << "  nonempty: " << (c.holds ? "yes" : "no") << "  [" << c.sentence << "]\n";
        else
            os << "  dim >= " << c.level << " via " << c.coordinate << ": "
               << (c.holds ? "yes" : "no") << "  [" << c.sentence << "]\n";
    }
    return os.str();
}

std::string render_text(const BoundingSet& b) {
    std::ostringstream os;
    os << "fiber variable: " << b.fiber_var << "\n";
    os << "witnesses (" << b.witnesses.size() << "):\n";
    for (const auto& w : b.witnesses) os << "  " << w.to_string() << "\n";
    os << "uniform finiteness bound: " << b.uniform_bound << "\n";
    return os.str();
}

std::string render_text(const FrobeniusReport& r) {
    std::ostringstream os;
    os << "F_" << r.prime << "(t), degree bound " << r.degree_bound << ": " << r.functions
       << " reduced rational functions, " << r.pairs_checked << " pairs, " << r.collisions
       << " collisions of x^" << r.prime << " + t*y^" << r.prime << "\n";
    return os.str();
}

}  // namespace acfq
