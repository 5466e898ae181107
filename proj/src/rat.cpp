#include "twistgen/rat.hpp"

namespace twistgen {

Rat rat_parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t slash = text.find('/');
  auto check_int = [&](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!check_int(text, true))
      throw std::invalid_argument("bad integer literal: " + text);
    return Rat(mpz_class(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!check_int(num, true) || !check_int(den, false))
    throw std::invalid_argument("bad rational literal: " + text);
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + text);
  Rat r(mpz_class(num), d);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_pow(const Rat& r, std::int64_t e) {
  if (e == 0) {
    if (r == 0) throw std::domain_error("0^0");
    return Rat(1);
  }
  if (r == 0) {
    if (e < 0) throw std::domain_error("zero to a negative power");
    return Rat(0);
  }
  const auto ue = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num().get_mpz_t(), ue);
  mpz_pow_ui(den.get_mpz_t(), r.get_den().get_mpz_t(), ue);
  Rat out;
  if (e > 0)
    out = Rat(num, den);
  else
    out = Rat(den, num);
  out.canonicalize();
  return out;
}

std::optional<Rat> rat_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  if (r == 0) return Rat(0);
  mpz_class ns, ds;
  if (!mpz_perfect_square_p(r.get_num().get_mpz_t())) return std::nullopt;
  if (!mpz_perfect_square_p(r.get_den().get_mpz_t())) return std::nullopt;
  mpz_sqrt(ns.get_mpz_t(), r.get_num().get_mpz_t());
  mpz_sqrt(ds.get_mpz_t(), r.get_den().get_mpz_t());
  return Rat(ns, ds);
}

}  // namespace twistgen
