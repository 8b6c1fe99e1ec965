#include "momentforge/family.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "momentforge/boolean.hpp"
#include "momentforge/domino.hpp"
#include "momentforge/invmaj.hpp"
#include "momentforge/oracle.hpp"
#include "momentforge/schur.hpp"

namespace momentforge {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 5> kIds = {{
    {Family::Schur, "schur"},
    {Family::Invmaj, "invmaj"},
    {Family::Boolean, "boolean"},
    {Family::Domino, "domino"},
    {Family::Board1n, "board1n"},
}};

std::int64_t get(const ParamMap& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw std::invalid_argument("missing parameter --" + key);
  return it->second;
}

int get_int(const ParamMap& params, const std::string& key) { return static_cast<int>(get(params, key)); }

MomentVector<Rational> tag(MomentVector<Rational> m, Family family, const ParamMap& params) {
  m.family = std::string(family_id(family));
  m.params = params;
  return m;
}

// Replaces orders >= from with exact oracle moments.
void fill_from_histogram(MomentVector<Rational>& raw, const oracle::Histogram& h, int from) {
  const auto exact = oracle::histogram_moments(h, raw.r_max());
  for (int r = from; r <= raw.r_max(); ++r) raw.entries[static_cast<std::size_t>(r)] = exact[r];
}

MomentVector<Rational> raw_moments(Family family, const ParamMap& p, int r_max, unsigned threads) {
  MomentVector<Rational> raw{MomentKind::Raw, {}, "", {}};
  switch (family) {
    case Family::Schur: {
      const int n = get_int(p, "n");
      const int c = get_int(p, "c");
      raw.entries.push_back(Rational(1));
      if (r_max >= 1) raw.entries.push_back(schur::first_moment(n, c));
      if (r_max >= 2) raw.entries.push_back(schur::second_moment(n, c, threads));
      raw.entries.resize(static_cast<std::size_t>(r_max) + 1, Rational(0));
      if (r_max >= 3) fill_from_histogram(raw, oracle::enumerate_schur(n, c, threads), 3);
      return raw;
    }
    case Family::Invmaj:
      return invmaj::raw_moments(get(p, "n"), r_max);
    case Family::Boolean: {
      const int n = get_int(p, "n");
      const int k = get_int(p, "k");
      if (k == 0) {
        for (int r = 0; r <= r_max; ++r) raw.entries.push_back(boolean::eval_at(boolean::raw_moment_k0(r), n));
        return raw;
      }
      raw.entries.push_back(Rational(1));
      if (r_max >= 1) raw.entries.push_back(boolean::eval_at(boolean::k_first_moment(k), n));
      if (r_max >= 2) raw.entries.push_back(boolean::eval_at(boolean::k_second_moment(k), n));
      if (r_max >= 3 && k == 1) raw.entries.push_back(boolean::eval_at(boolean::k1_third_moment(), n));
      const int closed = raw.r_max();
      if (closed < r_max) {
        if (n > 4) {
          throw std::invalid_argument("boolean k >= 1: no closed form beyond order " + std::to_string(closed) +
                                      " and the exhaustive oracle needs n <= 4");
        }
        raw.entries.resize(static_cast<std::size_t>(r_max) + 1, Rational(0));
        fill_from_histogram(raw, oracle::enumerate_boolean(n, k, threads), closed + 1);
      }
      return raw;
    }
    case Family::Domino:
      return domino::exact_raw_moments(domino::make_board(get(p, "m"), get(p, "n")), r_max);
    case Family::Board1n:
      return domino::raw_moments(domino::make_board(1, get(p, "n")), r_max);
  }
  throw std::logic_error("unhandled family");
}

}  // namespace

Family parse_family(std::string_view id) {
  for (const auto& [f, name] : kIds)
    if (name == id) return f;
  throw std::invalid_argument("unknown family '" + std::string(id) +
                              "'; expected one of: schur, invmaj, boolean, domino, board1n");
}

std::string_view family_id(Family family) {
  for (const auto& [f, name] : kIds)
    if (f == family) return name;
  return "unknown";
}

std::vector<std::string> family_parameters(Family family) {
  switch (family) {
    case Family::Schur:
      return {"n", "c"};
    case Family::Invmaj:
    case Family::Board1n:
      return {"n"};
    case Family::Boolean:
      return {"n", "k"};
    case Family::Domino:
      return {"m", "n"};
  }
  return {};
}

void validate_parameters(Family family, const ParamMap& params) {
  for (const auto& key : family_parameters(family)) {
    const auto v = get(params, key);
    if (v < (key == "k" ? 0 : 1)) throw std::invalid_argument("parameter --" + key + " is out of range");
  }
  if (family == Family::Schur && get(params, "c") < 2) throw std::invalid_argument("schur needs --c >= 2");
  if (family == Family::Boolean && get(params, "k") > get(params, "n")) {
    throw std::invalid_argument("boolean needs --k <= --n");
  }
  if (family == Family::Boolean && get(params, "n") > 62) throw std::invalid_argument("boolean needs --n <= 62");
}

MomentVector<Rational> family_moments(Family family, const ParamMap& params, MomentKind kind, int r_max,
                                      unsigned threads) {
  validate_parameters(family, params);
  if (r_max < 0) throw std::invalid_argument("moment order must be non-negative");
  const bool about_mean = family == Family::Invmaj || family == Family::Board1n;
  switch (kind) {
    case MomentKind::Raw:
      return tag(raw_moments(family, params, r_max, threads), family, params);
    case MomentKind::Central: {
      if (family == Family::Invmaj) return tag(invmaj::central_moments(get(params, "n"), r_max), family, params);
      auto raw = raw_moments(family, params, std::max(r_max, 1), threads);
      auto c = raw_to_central(raw, raw[1]);
      c.entries.resize(static_cast<std::size_t>(r_max) + 1);
      return tag(std::move(c), family, params);
    }
    case MomentKind::Binomial:
    case MomentKind::CentralBinomial: {
      if (about_mean) {
        auto b = family == Family::Invmaj ? invmaj::binomial_moments(get(params, "n"), r_max)
                                          : domino::board1n_binomial_moments(get(params, "n"), r_max);
        return tag(std::move(b), family, params);
      }
      return tag(raw_to_binomial(raw_moments(family, params, r_max, threads)), family, params);
    }
  }
  throw std::logic_error("unhandled moment kind");
}

Polynomial family_pgf(Family family, const ParamMap& params, unsigned threads) {
  validate_parameters(family, params);
  const Polynomial half_step("q", {Rational(1, 2), Rational(1, 2)});
  auto power = [&](std::int64_t e) {
    Polynomial acc = Polynomial::constant(Rational(1), "q");
    for (std::int64_t i = 0; i < e; ++i) acc *= half_step;
    return acc;
  };
  switch (family) {
    case Family::Invmaj:
      return invmaj::pgf(get_int(params, "n"));
    case Family::Board1n:
      return power(get(params, "n") - 1);
    case Family::Domino:
      if (get(params, "m") == 1) return power(get(params, "n") - 1);
      if (get(params, "n") == 1) return power(get(params, "m") - 1);
      return domino::board_pgf(domino::make_board(get(params, "m"), get(params, "n")));
    case Family::Boolean:
      if (get(params, "k") == 0) {
        if (get(params, "n") > 12) throw SizeGuardError("boolean k=0 pgf: degree 2^n above 4096");
        return power(std::int64_t{1} << get(params, "n"));
      }
      return oracle::enumerate_boolean(get_int(params, "n"), get_int(params, "k"), threads).pgf();
    case Family::Schur:
      return oracle::enumerate_schur(get_int(params, "n"), get_int(params, "c"), threads).pgf();
  }
  throw std::logic_error("unhandled family");
}

CentralMomentSource central_source(Family family, const ParamMap& fixed) {
  switch (family) {
    case Family::Invmaj:
      return [](std::int64_t n, int r_max) { return invmaj::central_moments(n, r_max); };
    case Family::Board1n:
      return [](std::int64_t n, int r_max) { return binomial_to_raw(domino::board1n_binomial_moments(n, r_max)); };
    case Family::Domino: {
      const auto m = get(fixed, "m");
      return [m](std::int64_t n, int r_max) { return domino::exact_central_moments(domino::make_board(m, n), r_max); };
    }
    case Family::Boolean: {
      if (get(fixed, "k") != 0) throw std::invalid_argument("normality: boolean supports k = 0 only");
      return [](std::int64_t n, int r_max) {
        const auto c = boolean::central_moments_k0(r_max);
        MomentVector<Rational> out{MomentKind::Central, {}, "boolean", {{"n", n}, {"k", 0}}};
        for (const auto& e : c.entries) out.entries.push_back(boolean::eval_at(e, n));
        return out;
      };
    }
    case Family::Schur:
      throw std::invalid_argument("normality: schur has closed-form moments only through order 2");
  }
  throw std::logic_error("unhandled family");
}

}  // namespace momentforge
