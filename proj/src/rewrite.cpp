#include "hopfgal/rewrite.hpp"

#include <mutex>

#include "hopfgal/linalg.hpp"

namespace hopfgal {

Presentation::Presentation(TablePtr table, std::vector<int> weights)
    : table_(std::move(table)), weights_(std::move(weights)) {
  if (weights_.empty()) weights_.assign(table_->size(), 1);
  if (weights_.size() != table_->size()) throw MathError("presentation: one weight per generator required");
  for (int w : weights_)
    if (w <= 0) throw MathError("presentation: weights must be positive");
  rules_by_last_.resize(table_->size());
}

int Presentation::weight(const Word& w) const {
  int s = 0;
  for (unsigned char c : w) s += weights_[c];
  return s;
}

bool Presentation::less(const Word& a, const Word& b) const {
  int wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  return a < b;
}

Word Presentation::leading_word(const NcPoly& p) const {
  if (p.is_zero()) throw MathError("leading word of zero");
  const Word* best = nullptr;
  for (const auto& [w, c] : p.terms())
    if (!best || less(*best, w)) best = &w;
  return *best;
}

void Presentation::add_relation(const NcPoly& rel) {
  if (rel.is_zero()) throw MathError("zero relation");
  Word lw = leading_word(rel);
  Scalar c = rel.coeff(lw);
  NcPoly tail = rel - NcPoly::monomial(table_, lw, c);
  relations_.push_back(rel);
  add_rule(lw, (-c.inverse()) * tail);
}

void Presentation::add_rule(const Word& lhs, const NcPoly& rhs) {
  if (lhs.empty()) throw MathError("rule with empty left-hand side");
  int d = table_->word_degree(lhs);
  for (const auto& [w, c] : rhs.terms()) {
    if (table_->word_degree(w) != d)
      throw MathError("inhomogeneous rule for " + table_->word_string(lhs));
    if (!less(w, lhs))
      throw MathError("rule tail term " + table_->word_string(w) + " is not below " + table_->word_string(lhs));
  }
  NcPoly tail = rhs;
  if (!tail.table()) tail = NcPoly(table_) + rhs;
  rules_.push_back({lhs, tail});
  rules_by_last_[static_cast<unsigned char>(lhs.back())].push_back(static_cast<int>(rules_.size() - 1));
  std::unique_lock lock(memo_mutex_);
  memo_.clear();
}

int Presentation::suffix_rule(const Word& w) const {
  if (w.empty()) return -1;
  for (int r : rules_by_last_[static_cast<unsigned char>(w.back())]) {
    const Word& l = rules_[r].lhs;
    if (l.size() <= w.size() && w.compare(w.size() - l.size(), l.size(), l) == 0) return r;
  }
  return -1;
}

NcPoly Presentation::nf_append(const NcPoly& p, char letter) const {
  NcPoly out(table_);
  for (const auto& [u, c] : p.terms()) {
    Word ux = u;
    ux.push_back(letter);
    NcPoly red;
    bool found = false;
    {
      std::shared_lock lock(memo_mutex_);
      auto it = memo_.find(ux);
      if (it != memo_.end()) {
        red = it->second;
        found = true;
      }
    }
    if (!found) {
      int r = suffix_rule(ux);
      if (r < 0) {
        red = NcPoly::monomial(table_, ux);
      } else {
        const Rule& rule = rules_[r];
        Word v = ux.substr(0, ux.size() - rule.lhs.size());
        red = NcPoly(table_);
        for (const auto& [t, a] : rule.rhs.terms()) {
          NcPoly part = nf_word(v + t);
          red += a * part;
        }
      }
      std::unique_lock lock(memo_mutex_);
      memo_.emplace(ux, red);
    }
    out += c * red;
  }
  return out;
}

NcPoly Presentation::nf_word(const Word& w) const {
  if (w.empty()) return one();
  {
    std::shared_lock lock(memo_mutex_);
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
  }
  NcPoly prefix = w.size() == 1 ? one() : nf_word(w.substr(0, w.size() - 1));
  NcPoly r = nf_append(prefix, w.back());
  std::unique_lock lock(memo_mutex_);
  memo_.emplace(w, r);
  return r;
}

NcPoly Presentation::normal_form(const NcPoly& p) const {
  if (p.table() && p.table() != table_) throw MathError("generator table mismatch");
  NcPoly out(table_);
  for (const auto& [w, c] : p.terms()) out += c * nf_word(w);
  return out;
}

bool Presentation::is_normal_word(const Word& w) const {
  for (size_t k = 1; k <= w.size(); ++k)
    if (suffix_rule(w.substr(0, k)) >= 0) return false;
  return true;
}

std::vector<Word> Presentation::normal_words(size_t max_len) const {
  std::vector<Word> out{Word()};
  size_t begin = 0;
  for (size_t len = 1; len <= max_len; ++len) {
    size_t end = out.size();
    for (size_t k = begin; k < end; ++k) {
      for (size_t g = 0; g < table_->size(); ++g) {
        Word w = out[k];
        w.push_back(static_cast<char>(g));
        if (suffix_rule(w) < 0) out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

NcPoly Presentation::parse(std::string_view text) const { return normal_form(NcPoly::parse(table_, text)); }

NcPoly Presentation::pow(const NcPoly& a, int n) const {
  if (n < 0) throw MathError("negative power");
  NcPoly r = one();
  for (int k = 0; k < n; ++k) r = mul(r, a);
  return r;
}

// ---------------------------------------------------------------- confluence

ConfluenceReport check_confluence(const Presentation& P, size_t degree_bound) {
  ConfluenceReport rep;
  const auto& rules = P.rules();
  const TablePtr& T = P.table();
  auto word = [&](const Word& w) { return NcPoly::monomial(T, w); };
  auto resolve = [&](const Word& overlap, size_t i, size_t j, const NcPoly& x, const NcPoly& y) {
    ++rep.pairs_checked;
    NcPoly diff = P.normal_form(x) - P.normal_form(y);
    if (!diff.is_zero()) rep.failures.push_back({overlap, i, j, diff});
  };
  for (size_t i = 0; i < rules.size(); ++i) {
    const Word& li = rules[i].lhs;
    for (size_t j = 0; j < rules.size(); ++j) {
      const Word& lj = rules[j].lhs;
      for (size_t k = 1; k < std::min(li.size(), lj.size()); ++k) {
        if (li.compare(li.size() - k, k, lj, 0, k) != 0) continue;
        Word overlap = li + lj.substr(k);
        if (overlap.size() > degree_bound) continue;
        resolve(overlap, i, j, rules[i].rhs * word(lj.substr(k)),
                word(li.substr(0, li.size() - k)) * rules[j].rhs);
      }
      if (i == j || lj.size() > li.size() || li.size() > degree_bound) continue;
      for (size_t p = 0; p + lj.size() <= li.size(); ++p) {
        if (li.compare(p, lj.size(), lj) != 0) continue;
        if (lj.size() == li.size() && j < i) continue;
        resolve(li, i, j, rules[i].rhs,
                word(li.substr(0, p)) * rules[j].rhs * word(li.substr(p + lj.size())));
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------- independence

IndependenceResult linear_independent(const Presentation& P, const std::vector<NcPoly>& polys) {
  Echelon<Word, ShortLex> ech;
  for (size_t k = 0; k < polys.size(); ++k) {
    NcPoly v = P.normal_form(polys[k]);
    Echelon<Word, ShortLex>::Comb dep;
    if (!ech.insert(v.terms(), &dep)) {
      IndependenceResult r;
      r.independent = false;
      r.witness.assign(polys.size(), Scalar());
      for (auto& [j, c] : dep) r.witness[j] = c;
      r.witness[k] = Scalar(-1);
      return r;
    }
  }
  return {};
}

}  // namespace hopfgal
