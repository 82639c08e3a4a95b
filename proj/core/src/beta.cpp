#include "vgt/beta.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace vgt {

namespace {

// shared by beta_eval and epsilon_kn so that the k = 1 closed form and the
// single-chain evaluation produce bit-identical enclosures
Rat chain_tolerance(const Rat& rel_width, unsigned n, unsigned k) {
  return rel_width / Rat(20L * n * (k + 1));
}

}  // namespace

std::string TermChain::str() const {
  std::string s = "[";
  for (size_t i = 0; i < levels.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(levels[i]);
  }
  return s + "]";
}

std::vector<TermChain> beta_terms(unsigned k) {
  if (k < 1) throw domain_error("beta_terms requires k >= 1");
  std::vector<TermChain> out;
  out.reserve(1u << (k - 1));
  // subsets of {1..k-1}, each arranged in decreasing order after the head k
  for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
    TermChain chain;
    chain.levels.push_back(k);
    for (unsigned lvl = k - 1; lvl >= 1; --lvl) {
      if (mask & (1u << (lvl - 1))) chain.levels.push_back(lvl);
      if (lvl == 1) break;
    }
    out.push_back(std::move(chain));
  }
  std::sort(out.begin(), out.end(), [](const TermChain& a, const TermChain& b) {
    return std::lexicographical_compare(a.levels.begin(), a.levels.end(), b.levels.begin(),
                                        b.levels.end());
  });
  return out;
}

BetaResult beta_eval(unsigned k, unsigned n, const Rat& c, Variant v, const Rat& rel_width) {
  if (n < 1) throw domain_error("beta requires n >= 1");
  BetaResult res;
  res.k = k;
  res.n = n;
  res.variant = v;
  res.c = c;
  if (k == 0) {
    res.value = Enc(Rat(0));
    return res;
  }
  if (!(c > Rat(1))) throw domain_error("beta requires c > 1");

  std::vector<TermChain> chains = beta_terms(k);
  auto chain_index = [&chains](const std::vector<unsigned>& levels) {
    for (size_t i = 0; i < chains.size(); ++i)
      if (chains[i].levels == levels) return i;
    throw std::logic_error("chain enumeration out of sync");
  };

  Rat tol = chain_tolerance(rel_width, n, k);
  std::vector<Enc> gammas(chains.size());

  auto evaluate_all = [&](const Rat& t) {
    std::vector<unsigned> prefix;
    // one h^-1 per expansion node; children share the shifted c
    std::function<void(unsigned, const Enc&)> walk = [&](unsigned level, const Enc& cur) {
      prefix.push_back(level);
      Enc x = h_inv(level, n, v, cur, t);
      gammas[chain_index(prefix)] = gamma_enc(cur, x, n);
      if (level > 1) {
        Enc next = x / Rat(2L * level) + Rat(1);
        for (unsigned lvl = level - 1; lvl >= 1; --lvl) {
          walk(lvl, next);
          if (lvl == 1) break;
        }
      }
      prefix.pop_back();
    };
    walk(k, Enc(c));
  };

  // a chain is the certified argmax when its gamma sits strictly below all
  // others (values are 1 - gamma)
  auto resolved = [&]() -> int {
    for (size_t i = 0; i < gammas.size(); ++i) {
      bool best = true;
      for (size_t j = 0; j < gammas.size() && best; ++j)
        if (j != i) best = gammas[i].strictly_below(gammas[j]);
      if (best) return static_cast<int>(i);
    }
    return -1;
  };

  evaluate_all(tol);
  int best = resolved();
  for (int round = 0; best < 0 && chains.size() > 1 && round < 4; ++round) {
    tol = tol / Rat(Int::ten_pow(10));
    evaluate_all(tol);
    best = resolved();
  }

  res.chains.reserve(chains.size());
  for (size_t i = 0; i < chains.size(); ++i)
    res.chains.push_back({chains[i], gammas[i], Enc::one_minus(gammas[i])});

  res.value = res.chains.front().value;
  for (size_t i = 1; i < res.chains.size(); ++i)
    res.value = Enc::max(res.value, res.chains[i].value);

  if (best >= 0) {
    res.argmax.push_back(chains[best]);
  } else if (chains.size() == 1) {
    res.argmax.push_back(chains.front());
  } else {
    res.tie = true;
    // candidates: chains whose value upper end reaches the proven maximum
    Rat max_lo = res.value.lo();
    for (size_t i = 0; i < res.chains.size(); ++i)
      if (res.chains[i].value.hi() >= max_lo) res.argmax.push_back(chains[i]);
  }
  return res;
}

Enc epsilon_kn(unsigned k, unsigned n, Variant v, const Rat& rel_width) {
  if (k < 1 || n < 1) throw domain_error("epsilon requires k, n >= 1");
  if (rel_width.sgn() <= 0) throw domain_error("rel_width must be positive");

  Rat tol = chain_tolerance(rel_width, n, k);
  for (int attempt = 0;; ++attempt) {
    Enc result;
    if (k == 1) {
      Enc x = h_inv(1, n, v, Rat(2), tol);
      result = gamma_enc(Enc(Rat(2)), x, n);
    } else {
      Enc c = delta_kn(k, n, v, tol) / Rat(2L * k) + Rat(1);
      for (unsigned lvl = k - 1; lvl >= 2; --lvl) {
        Enc x = h_inv(lvl, n, v, c, tol);
        c = x / Rat(2L * lvl) + Rat(1);
      }
      Enc y = h_inv(1, n, v, c, tol);
      result = gamma_enc(c, y, n);
    }
    if (result.rel_width() <= rel_width || attempt >= 4) return result;
    tol = tol / Rat(Int::ten_pow(4));
  }
}

Enc alpha_kn(unsigned k, unsigned n, Variant v, const Rat& rel_width) {
  return Enc::one_minus(epsilon_kn(k, n, v, rel_width));
}

RevisedCell alpha_revised(unsigned k, unsigned n, Variant v, const Rat& rel_width) {
  if (k < 1 || n < 1) throw domain_error("alpha requires k, n >= 1");
  RevisedCell cell;
  if (n < k || (k == 1 && n == 1)) {
    cell.kind = RevisedKind::NotApplicable;
  } else if (n <= 3) {
    cell.kind = RevisedKind::Zero;
  } else if (k == 1) {
    cell.kind = RevisedKind::Half;
  } else {
    cell.kind = RevisedKind::Value;
    cell.value = alpha_kn(k, n, v, rel_width);
  }
  return cell;
}

}  // namespace vgt
