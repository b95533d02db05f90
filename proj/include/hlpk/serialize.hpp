// JSON views of the arithmetic types.  Polynomials are arrays of decimal
// strings in ascending degree (big integers do not survive JSON numbers),
// rational functions are {num, den} pairs of those, and a SymFunc is
// {basis, terms} with one {partition, num, den} object per term in the
// canonical partition order.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "intpoly.hpp"
#include "partition.hpp"
#include "ratfunc.hpp"
#include "symfunc.hpp"

namespace hlpk {

// Insertion-ordered so emitted objects read in the order they are built.
using Json = nlohmann::ordered_json;

inline Json poly_json(const IntPoly& p) {
  Json out = Json::array();
  for (int i = 0; i <= p.degree(); ++i) out.push_back(p.coeff(i).get_str());
  return out;
}

inline IntPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("poly: expected an array");
  std::vector<mpz_class> c;
  c.reserve(j.size());
  for (const auto& v : j) {
    if (v.is_string()) {
      c.emplace_back(v.get<std::string>());
    } else if (v.is_number_integer()) {
      c.emplace_back(static_cast<long>(v.get<long long>()));
    } else {
      throw std::invalid_argument("poly: coefficients are decimal strings");
    }
  }
  return IntPoly(std::move(c));
}

inline Json ratfunc_json(const RatFunc& f) {
  return Json{{"num", poly_json(f.num())}, {"den", poly_json(f.den())}};
}

inline RatFunc ratfunc_from_json(const Json& j) {
  return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

inline Json partition_json(const Partition& lam) {
  Json out = Json::array();
  for (int i = 1; i <= lam.length(); ++i) out.push_back(lam.part(i));
  return out;
}

inline Partition partition_from_json(const Json& j) {
  if (!j.is_array())
    throw std::invalid_argument("partition: expected an array");
  std::vector<int> parts;
  parts.reserve(j.size());
  for (const auto& v : j) parts.push_back(v.get<int>());
  return Partition(std::move(parts));  // validates sign and ordering
}

inline Json symfunc_json(const SymFunc& f) {
  Json terms = Json::array();
  for (const auto& [lam, c] : f.terms()) {
    Json term{{"partition", partition_json(lam)}};
    term["num"] = poly_json(c.num());
    term["den"] = poly_json(c.den());
    terms.push_back(std::move(term));
  }
  return Json{{"basis", basis_name(f.basis())}, {"terms", std::move(terms)}};
}

inline SymFunc symfunc_from_json(const Json& j) {
  SymFunc f(parse_basis(j.at("basis").get<std::string>()));
  for (const auto& term : j.at("terms"))
    f.add_term(partition_from_json(term.at("partition")),
               ratfunc_from_json(term));
  return f;
}

}  // namespace hlpk
