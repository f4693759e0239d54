#include "lmflat/localmodel.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lmflat::local {

bool in_cyclic_interval(int x, int from, int to, int n) {
  auto mod = [n](int v) { return ((v % n) + n) % n; };
  const int len = mod(to - from);
  return mod(x - from) < len;
}

bool ChartReport::passed() const {
  return free_orbits == rank * (rank + 1) / 2 && pairing_lemma && index_identities &&
         substitution_zero && step_cases_once;
}

nlohmann::ordered_json ChartReport::to_json() const {
  nlohmann::ordered_json j;
  j["r"] = rank;
  j["x0"] = x0;
  j["I"] = I;
  j["J"] = J;
  j["free_orbits"] = free_orbits;
  j["expected"] = rank * (rank + 1) / 2;
  j["pairing_lemma"] = pairing_lemma;
  j["index_identities"] = index_identities;
  j["step_cases_once"] = step_cases_once;
  j["substitution_zero"] = substitution_zero;
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    std::string pattern;
    for (bool f : e.free_at) pattern += f ? '1' : 'p';
    nlohmann::ordered_json row;
    row["lambda"] = e.lambda;
    row["mu"] = e.mu;
    row["i_lambda"] = e.i_lambda;
    row["j_mu"] = e.j_mu;
    row["pattern"] = pattern;
    row["partner"] = {e.partner_lambda, e.partner_mu};
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  if (!witnesses.empty()) j["witnesses"] = witnesses;
  return j;
}

ChartReport extreme_chart(int r, const alcove::Alcove& x, std::uint32_t prime) {
  auto extremes = alcove::extreme_alcoves(r);
  if (x.rank != r || std::find(extremes.begin(), extremes.end(), x) == extremes.end())
    throw std::invalid_argument("not an extreme alcove");
  const int n = 2 * r;
  ChartReport rep;
  rep.rank = r;
  rep.x0 = x.kr_vector(0);
  for (int j = 1; j <= n; ++j) (rep.x0[j - 1] == 0 ? rep.I : rep.J).push_back(j);
  const auto& I = rep.I;
  const auto& J = rep.J;
  auto partner = [r](int lambda, int mu) { return std::pair{r - mu + 1, r - lambda + 1}; };

  rep.index_identities = true;
  for (int l = 1; l <= r; ++l) {
    if (I[l - 1] != n + 1 - J[r - l]) {
      rep.index_identities = false;
      rep.witnesses.push_back("i_" + std::to_string(l) + " != 2r+1-j_" + std::to_string(r - l + 1));
    }
    if (J[l - 1] != n + 1 - I[r - l]) {
      rep.index_identities = false;
      rep.witnesses.push_back("j_" + std::to_string(l) + " != 2r+1-i_" + std::to_string(r - l + 1));
    }
  }

  rep.pairing_lemma = true;
  for (int l = 1; l <= r; ++l)
    for (int m = 1; m <= r; ++m) {
      ExtremeEntry e;
      e.lambda = l;
      e.mu = m;
      e.i_lambda = I[l - 1];
      e.j_mu = J[m - 1];
      std::tie(e.partner_lambda, e.partner_mu) = partner(l, m);
      for (int i = 0; i < n; ++i) {
        bool lhs = in_cyclic_interval(i, e.j_mu, e.i_lambda, n);
        bool rhs = in_cyclic_interval(n - i, J[r - l], I[r - m], n);
        e.free_at.push_back(lhs);
        if (lhs != rhs) {
          rep.pairing_lemma = false;
          rep.witnesses.push_back("pairing fails at lambda=" + std::to_string(l) +
                                  " mu=" + std::to_string(m) + " i=" + std::to_string(i));
        }
      }
      rep.entries.push_back(std::move(e));
    }

  // One free coordinate per duality orbit of (lambda, mu).
  std::map<std::pair<int, int>, int> orbit;
  std::vector<std::string> free_names;
  for (int l = 1; l <= r; ++l)
    for (int m = 1; m <= r; ++m) {
      auto key = std::min(std::pair{l, m}, partner(l, m));
      if (orbit.emplace(key, static_cast<int>(free_names.size())).second)
        free_names.push_back("u_" + std::to_string(key.first) + "_" + std::to_string(key.second));
    }
  rep.free_orbits = static_cast<int>(free_names.size());

  // GL chart equations for F_0 -> F_1 -> ... -> F_{2r-1} -> F_0, plus duality.
  // Step i multiplies coordinate i+1 by pi: comparing rows i_lambda of
  // D_i M_i = M_{i+1} K_i gives pi^[i_lambda = i+1] a^i = pi^[j_mu = i+1] a^{i+1}.
  std::vector<std::string> names;
  auto var = [r, n](int i, int l, int m) { return ((i % n) * r + (l - 1)) * r + (m - 1); };
  for (int i = 0; i < n; ++i)
    for (int l = 1; l <= r; ++l)
      for (int m = 1; m <= r; ++m)
        names.push_back("a" + std::to_string(i) + "_" + std::to_string(l) + "_" + std::to_string(m));
  names.push_back("pi");
  auto R = poly::make_ring(names, prime);
  const Polynomial pi = Polynomial::variable(R, "pi");
  auto a = [&](int i, int l, int m) { return Polynomial::variable(R, var(i, l, m)); };

  std::vector<Polynomial> equations;
  rep.step_cases_once = true;
  for (int l = 1; l <= r; ++l)
    for (int m = 1; m <= r; ++m) {
      int first = 0, second = 0;
      for (int i = 0; i < n; ++i) {
        bool up = I[l - 1] == i + 1;
        bool down = J[m - 1] == i + 1;
        first += up && !down;
        second += down && !up;
        if (up && down) rep.step_cases_once = false;
        Polynomial lhs = up ? pi * a(i, l, m) : a(i, l, m);
        Polynomial rhs = down ? pi * a(i + 1, l, m) : a(i + 1, l, m);
        equations.push_back(lhs - rhs);
      }
      if (first != 1 || second != 1) rep.step_cases_once = false;
    }
  for (int i = 0; i < n; ++i)
    for (int l = 1; l <= r; ++l)
      for (int m = 1; m <= r; ++m) {
        auto [pl, pm] = partner(l, m);
        equations.push_back(a(i, l, m) - a(n - i, pl, pm));
      }

  free_names.push_back("pi");
  auto T = poly::make_ring(free_names, prime);
  const Polynomial tpi = Polynomial::variable(T, "pi");
  std::vector<Polynomial> images(R->num_vars(), Polynomial(T));
  for (const auto& e : rep.entries) {
    Polynomial u = Polynomial::variable(T, orbit.at(std::min(std::pair{e.lambda, e.mu},
                                                             std::pair{e.partner_lambda, e.partner_mu})));
    for (int i = 0; i < n; ++i) images[var(i, e.lambda, e.mu)] = e.free_at[i] ? u : tpi * u;
  }
  images.back() = tpi;
  rep.substitution_zero = true;
  for (const auto& eq : equations) {
    Polynomial v = eq.substitute(images);
    if (!v.is_zero()) {
      rep.substitution_zero = false;
      rep.witnesses.push_back("equation does not vanish: " + eq.to_text() + " -> " + v.to_text());
      break;
    }
  }
  return rep;
}

} // namespace lmflat::local
