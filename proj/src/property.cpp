#include "kmconv/property.hpp"

#include <map>
#include <string>
#include <utility>

#include "kmconv/errors.hpp"

namespace kmconv {

namespace {

RootVector subtract_simple(RootVector v, int beta) {
  v.coords[beta - 1] -= 1;
  return v;
}

std::string word_string(Word const& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) {
      s += ",";
    }
    s += std::to_string(w[i]);
  }
  return s + "]";
}

// Violations of the one-step condition at the decomposition w = v * w_beta:
// all alpha in Phi_v with alpha - beta a root.
std::vector<Violation> decomposition_violations(CartanMatrix const& cm,
                                                Decomposition const& dec) {
  std::vector<Violation> out;
  for (auto const& alpha : phi_w(cm, dec.v)) {
    RootVector diff = subtract_simple(alpha, dec.beta);
    if (is_root(cm, diff)) {
      out.push_back(Violation{dec.v.word(), dec.beta, alpha, std::move(diff)});
    }
  }
  return out;
}

// Condition C(v, beta): no alpha in Phi_v has alpha - beta a root.
bool condition_holds(CartanMatrix const& cm, WeylElement const& v, int beta) {
  for (auto const& alpha : phi_w(cm, v)) {
    if (is_root(cm, subtract_simple(alpha, beta))) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Decomposition> decompositions(CartanMatrix const& cm,
                                          WeylElement const& w) {
  std::vector<Decomposition> out;
  for (int beta = 1; beta <= cm.rank(); ++beta) {
    if (!w.is_descent(beta)) {
      continue;
    }
    WeylElement v = multiply_generator(cm, w, beta);
    if (v.length() != w.length() - 1) {
      throw InternalError("descent did not shorten the element");
    }
    out.push_back(Decomposition{std::move(v), beta});
  }
  return out;
}

ElementCheck check_element(CartanMatrix const& cm, WeylElement const& w) {
  ElementCheck res;
  if (w.length() == 0) {
    res.admissible = true;
    return res;
  }
  std::vector<Violation> all;
  for (auto& dec : decompositions(cm, w)) {
    auto bad = decomposition_violations(cm, dec);
    if (bad.empty()) {
      res.admissible = true;
      res.via = std::move(dec);
      res.violations.clear();
      return res;
    }
    all.insert(all.end(), bad.begin(), bad.end());
  }
  res.admissible = false;
  res.violations = std::move(all);
  return res;
}

PropertyReport check_property(CartanMatrix const& cm, int max_length) {
  if (max_length < 0) {
    throw DomainError("max_length must be nonnegative");
  }
  PropertyReport report;
  report.length = max_length;
  ShellEnumerator shells(cm);
  for (int l = 0; l <= max_length; ++l) {
    if (l > 0 && !shells.advance()) {
      break;  // finite group exhausted: the remaining shells are empty
    }
    // Shortlex visiting order makes the first failure the shortlex-least one.
    for (auto const& w : shells.shell()) {
      ++report.elements_checked;
      ElementCheck res = check_element(cm, w);
      if (!res.admissible) {
        report.status = PropertyStatus::fails_at;
        report.length = l;
        report.failing = w;
        report.violations = std::move(res.violations);
        return report;
      }
    }
  }
  report.status = PropertyStatus::holds_up_to;
  return report;
}

namespace {

bool admissible_dfs(CartanMatrix const& cm, WeylElement const& w,
                    std::map<IntMat, bool>& failed, Word& out) {
  if (w.length() == 0) {
    return true;
  }
  if (failed.contains(w.action())) {
    return false;
  }
  for (auto const& dec : decompositions(cm, w)) {
    if (!condition_holds(cm, dec.v, dec.beta)) {
      continue;
    }
    if (admissible_dfs(cm, dec.v, failed, out)) {
      out.push_back(dec.beta);  // letters emerge leftmost-first
      return true;
    }
  }
  failed.emplace(w.action(), true);
  return false;
}

}  // namespace

Word admissible_word(CartanMatrix const& cm, WeylElement const& w) {
  std::map<IntMat, bool> failed;
  Word word;
  if (!admissible_dfs(cm, w, failed, word)) {
    throw NoAdmissibleWord("no admissible word exists for element " +
                           word_string(w.word()));
  }
  if (!is_admissible_word(cm, word)) {
    throw InternalError("admissible-word search produced a non-admissible word");
  }
  if (!(WeylElement::from_word(cm, word) == w)) {
    throw InternalError("admissible-word search changed the group element");
  }
  return word;
}

bool is_admissible_word(CartanMatrix const& cm, Word const& word) {
  if (!is_reduced(cm, word)) {
    return false;
  }
  WeylElement v = WeylElement::identity(cm);
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    v = v.extend(cm, word[i]);  // prefix v_{i+1}
    if (!condition_holds(cm, v, word[i + 1])) {
      return false;
    }
  }
  return true;
}

ClaimsReport verify_prop42_claims(CartanMatrix const& cm, int max_length) {
  int const n = cm.rank();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (cm.a(i, j) != cm.a(j, i)) {
        throw HypothesisViolated("matrix is not symmetric at (" + std::to_string(i) +
                                 "," + std::to_string(j) + ")");
      }
      if (i != j && cm.a(i, j) > -2) {
        throw HypothesisViolated("off-diagonal entry (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") must be <= -2");
      }
    }
  }
  if (max_length < 0) {
    throw DomainError("max_length must be nonnegative");
  }

  ClaimsReport report;

  auto check_word = [&](WeylElement const& w, RootVector const& r) {
    Word const& word = w.word();
    if (word.empty()) {
      return;
    }
    ++report.words_checked;
    int const last = word.back();
    // Claim 1: in r = w_{ik} .. w_{i2} alpha_{i1}, the last-letter coordinate
    // strictly dominates every other coordinate.
    for (int j = 1; j <= n; ++j) {
      if (j != last && r.coords[last - 1] <= r.coords[j - 1]) {
        report.failures.push_back(WordClaimFailure{word, 1, r});
        break;
      }
    }
    // Claim 2: every root in Phi of the prefix pairs strictly negatively with
    // the last simple coroot.
    if (word.size() >= 2) {
      Word prefix(word.begin(), word.end() - 1);
      for (auto const& alpha : phi_of_word(cm, prefix)) {
        if (pair_simple_coroot(cm, alpha, last) >= 0) {
          report.failures.push_back(WordClaimFailure{word, 2, alpha});
          break;
        }
      }
    }
  };

  // Iterative depth-first enumeration of all reduced words, carrying the
  // claim-1 root incrementally: appending letter j maps r to w_j(r).
  struct Frame {
    WeylElement w;
    RootVector r;
    int next_letter = 1;
  };
  std::vector<Frame> stack;
  stack.push_back(Frame{WeylElement::identity(cm), zero_root(cm), 1});
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next_letter > n || top.w.length() >= max_length) {
      stack.pop_back();
      continue;
    }
    int const j = top.next_letter++;
    if (top.w.is_descent(j)) {
      continue;
    }
    Frame child{top.w.extend(cm, j),
                top.w.length() == 0 ? simple_root(cm, j) : reflect_root(cm, top.r, j),
                1};
    check_word(child.w, child.r);
    stack.push_back(std::move(child));
  }
  return report;
}

bool verify_commutation_condition(CartanMatrix const& cm, Word const& word,
                                  std::pair<int, int>* failure) {
  if (!is_admissible_word(cm, word)) {
    throw DomainError("commutation condition applies to admissible words; " +
                      word_string(word) + " is not one");
  }
  // nu_i = w_{beta_l} .. w_{beta_{i+1}} beta_i: exactly the Phi_w list, with
  // nu_l at the front and nu_1 at the back.
  auto phi = phi_of_word(cm, word);
  int const l = static_cast<int>(phi.size());
  for (int a = 0; a < l; ++a) {
    for (int b = a + 1; b < l; ++b) {
      RootVector sum = phi[a];
      for (int k = 0; k < cm.rank(); ++k) {
        sum.coords[k] += phi[b].coords[k];
      }
      if (is_root(cm, sum)) {
        if (failure) {
          *failure = {l - b, l - a};  // back to 1-based nu indices, i < j
        }
        return false;
      }
    }
  }
  return true;
}

}  // namespace kmconv
