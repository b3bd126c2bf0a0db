#pragma once

#include "epslab/cyclotomic.hpp"
#include "epslab/padic.hpp"

#include <json.hpp>

namespace epslab {

using Json = nlohmann::ordered_json;

inline Json cyclo_to_json(const CyclotomicNumber& x) {
    Json coords = Json::array();
    for (const auto& c : x.coords()) coords.push_back(rational_to_string(c));
    return Json{{"order", x.order()}, {"coords", coords}};
}

inline CyclotomicNumber cyclo_from_json(const Json& j) {
    if (!j.contains("order") || !j.contains("coords"))
        throw std::invalid_argument("cyclotomic json: need order and coords");
    unsigned long n = j.at("order").get<unsigned long>();
    std::vector<Rational> coords;
    for (const auto& c : j.at("coords")) coords.push_back(rational_from_string(c.get<std::string>()));
    return CyclotomicNumber::from_coords(n, std::move(coords));
}

inline Json padic_to_json(const PadicNumber& x) {
    Json j{{"p", x.p()}};
    if (x.is_zero_at_precision()) {
        j["zero"] = true;
        j["val"] = x.abs_precision();  // known only to be O(p^val)
        j["digits"] = Json::array();
        j["prec"] = 0;
        return j;
    }
    j["zero"] = false;
    j["val"] = x.valuation();
    j["digits"] = x.digits();
    j["prec"] = x.precision();
    return j;
}

inline PadicNumber padic_from_json(const Json& j) {
    unsigned long p = j.at("p").get<unsigned long>();
    if (j.value("zero", false)) return PadicNumber::zero_at(p, j.at("val").get<long>());
    unsigned prec = j.at("prec").get<unsigned>();
    BigInt unit = 0, scale = 1;
    for (const auto& d : j.at("digits")) {
        unit += BigInt(d.get<unsigned long>()) * scale;
        scale *= p;
    }
    PadicNumber u = PadicNumber::from_integer(unit, p, prec);
    if (u.is_zero_at_precision() || u.valuation() != 0)
        throw std::invalid_argument("padic json: leading digit must be a unit");
    return u * PadicNumber::p_power(p, j.at("val").get<long>(), prec);
}

}  // namespace epslab
