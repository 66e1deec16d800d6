#include "kauffman/serialize.hpp"

namespace kauffman {

nlohmann::json to_json(const LaurentPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({e.first, e.second, c.get_str()});
    return terms;
}

nlohmann::json to_json(const RatFunc& f) {
    return {{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
    LaurentPoly p;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3)
            throw std::invalid_argument("bad polynomial term in JSON");
        p.add_term(t[0].get<long>(), t[1].get<long>(),
                   mpz_class(t[2].get<std::string>()));
    }
    return p;
}

RatFunc ratfunc_from_json(const nlohmann::json& j) {
    return RatFunc(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

}  // namespace kauffman
