#include "chiro/poly.hpp"

#include <json.hpp>

#include "chiro/error.hpp"

namespace chiro {

UnivarPoly UnivarPoly::monomial(unsigned e, const mpz_class& c) {
  UnivarPoly p;
  p.add(e, c);
  return p;
}

void UnivarPoly::add(unsigned e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class UnivarPoly::coeff(unsigned e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

unsigned UnivarPoly::min_exp() const {
  if (terms_.empty()) fail(Errc::EmptyInput, "zero polynomial has no exponents");
  return terms_.begin()->first;
}

unsigned UnivarPoly::max_exp() const {
  if (terms_.empty()) fail(Errc::EmptyInput, "zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

mpz_class UnivarPoly::at_one() const {
  mpz_class s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

mpz_class UnivarPoly::derivative_at_one() const {
  mpz_class s = 0;
  for (const auto& [e, c] : terms_) s += c * e;
  return s;
}

UnivarPoly& UnivarPoly::operator+=(const UnivarPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b) {
  UnivarPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add(ea + eb, ca * cb);
  return r;
}

namespace {
std::string monomial_text(const mpz_class& c, const std::string& vars) {
  if (vars.empty()) return c.get_str();
  if (c == 1) return vars;
  return c.get_str() + "*" + vars;
}

std::string power(char var, unsigned e) {
  if (e == 0) return "";
  if (e == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(e);
}

std::string join_terms(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}
}  // namespace

std::string UnivarPoly::to_string(char var) const {
  std::vector<std::string> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) parts.push_back(monomial_text(it->second, power(var, it->first)));
  return join_terms(parts);
}

BivarPoly BivarPoly::monomial(unsigned eu, unsigned ev, const mpz_class& c) {
  BivarPoly p;
  p.add(eu, ev, c);
  return p;
}

BivarPoly BivarPoly::product(const UnivarPoly& u_part, const UnivarPoly& v_part) {
  BivarPoly p;
  for (const auto& [eu, cu] : u_part.terms())
    for (const auto& [ev, cv] : v_part.terms()) p.add(eu, ev, cu * cv);
  return p;
}

void BivarPoly::add(unsigned eu, unsigned ev, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{eu, ev}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class BivarPoly::coeff(unsigned eu, unsigned ev) const {
  const auto it = terms_.find(Key{eu, ev});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class BivarPoly::at_one() const {
  mpz_class s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

UnivarPoly BivarPoly::v_slice(unsigned ev) const {
  UnivarPoly r;
  for (const auto& [k, c] : terms_)
    if (k.second == ev) r.add(k.first, c);
  return r;
}

UnivarPoly BivarPoly::u_slice(unsigned eu) const {
  UnivarPoly r;
  for (const auto& [k, c] : terms_)
    if (k.first == eu) r.add(k.second, c);
  return r;
}

UnivarPoly BivarPoly::u_marginal() const {
  UnivarPoly r;
  for (const auto& [k, c] : terms_) r.add(k.first, c);
  return r;
}

UnivarPoly BivarPoly::v_marginal() const {
  UnivarPoly r;
  for (const auto& [k, c] : terms_) r.add(k.second, c);
  return r;
}

unsigned BivarPoly::min_v_exp() const {
  if (terms_.empty()) fail(Errc::EmptyInput, "zero polynomial has no exponents");
  unsigned m = terms_.begin()->first.second;
  for (const auto& [k, c] : terms_) m = std::min(m, k.second);
  return m;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

std::string BivarPoly::to_string() const {
  std::vector<std::string> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string vars = power('u', it->first.first);
    const std::string pv = power('v', it->first.second);
    if (!vars.empty() && !pv.empty()) vars += "*";
    vars += pv;
    parts.push_back(monomial_text(it->second, vars));
  }
  return join_terms(parts);
}

std::string to_json(const UnivarPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e, c.get_str()});
  return nlohmann::json{{"terms", terms}}.dump();
}

std::string to_json(const BivarPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : p.terms()) terms.push_back({k.first, k.second, c.get_str()});
  return nlohmann::json{{"terms", terms}}.dump();
}

namespace {

nlohmann::json parse_terms(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, std::string("bad polynomial JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    fail(Errc::ParseError, "polynomial JSON needs a \"terms\" array");
  return j["terms"];
}

unsigned exponent(const nlohmann::json& e) {
  if (!e.is_number_unsigned()) fail(Errc::ParseError, "exponent must be a non-negative integer");
  return e.get<unsigned>();
}

mpz_class coefficient(const nlohmann::json& c) {
  if (!c.is_string()) fail(Errc::ParseError, "coefficient must be a decimal string");
  mpz_class z;
  if (z.set_str(c.get<std::string>(), 10) != 0) fail(Errc::ParseError, "bad coefficient '" + c.get<std::string>() + "'");
  return z;
}

}  // namespace

UnivarPoly univar_from_json(std::string_view text) {
  UnivarPoly p;
  for (const auto& t : parse_terms(text)) {
    if (!t.is_array() || t.size() != 2) fail(Errc::ParseError, "univariate term must be [e, \"c\"]");
    p.add(exponent(t[0]), coefficient(t[1]));
  }
  return p;
}

BivarPoly bivar_from_json(std::string_view text) {
  BivarPoly p;
  for (const auto& t : parse_terms(text)) {
    if (!t.is_array() || t.size() != 3) fail(Errc::ParseError, "bivariate term must be [eu, ev, \"c\"]");
    p.add(exponent(t[0]), exponent(t[1]), coefficient(t[2]));
  }
  return p;
}

}  // namespace chiro
