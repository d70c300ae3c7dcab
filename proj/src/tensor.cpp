#include "hopfgal/tensor.hpp"

namespace hopfgal {

namespace {

size_t count_p(const std::string& sig) {
  size_t n = 0;
  for (char c : sig) n += c == 'P';
  return n;
}

void check_signature(const std::string& sig) {
  if (sig.empty()) throw MathError("empty tensor signature");
  for (char c : sig)
    if (c != 'P' && c != 'H') throw MathError("bad tensor signature: " + sig);
}

}  // namespace

TensorElem::TensorElem(PresentationPtr P, std::string signature) : P_(std::move(P)), sig_(std::move(signature)) {
  check_signature(sig_);
}

void TensorElem::add_term(const TensorKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElem TensorElem::pure(PresentationPtr P, const std::string& signature, const std::vector<NcPoly>& pfactors,
                            const std::vector<int>& hfactors) {
  TensorElem out(P, signature);
  if (pfactors.size() != count_p(signature) || hfactors.size() != signature.size() - pfactors.size())
    throw MathError("tensor factors do not match signature " + signature);
  const Grading& G = P->table()->grading();
  std::vector<NcPoly> reduced;
  for (const auto& f : pfactors) reduced.push_back(P->normal_form(f));
  std::vector<int> hs;
  for (int h : hfactors) hs.push_back(G.reduce(h));
  // Cartesian expansion over the P factors.
  std::vector<std::pair<std::vector<Word>, Scalar>> acc{{{}, Scalar(1)}};
  for (const auto& f : reduced) {
    std::vector<std::pair<std::vector<Word>, Scalar>> next;
    for (const auto& [ws, c] : acc)
      for (const auto& [w, a] : f.terms()) {
        auto ws2 = ws;
        ws2.push_back(w);
        next.emplace_back(std::move(ws2), c * a);
      }
    acc = std::move(next);
  }
  for (auto& [ws, c] : acc) out.add_term(TensorKey{std::move(ws), hs}, c);
  return out;
}

TensorElem TensorElem::pairs(PresentationPtr P, const std::vector<std::pair<NcPoly, NcPoly>>& terms) {
  TensorElem out(P, "PP");
  for (const auto& [l, r] : terms) out += pure(P, "PP", {l, r});
  return out;
}

int TensorElem::key_degree(const TensorKey& k) const {
  const auto& T = *P_->table();
  int d = 0;
  for (const auto& w : k.p) d += T.word_degree(w);
  for (int h : k.h) d += h;
  return T.grading().reduce(d);
}

std::optional<int> TensorElem::total_degree() const {
  std::optional<int> d;
  for (const auto& [k, c] : terms_) {
    int e = key_degree(k);
    if (d && *d != e) return std::nullopt;
    d = e;
  }
  return d.value_or(0);
}

int TensorElem::p_slot_degree(const TensorKey& k, size_t pslot) const {
  return P_->table()->word_degree(k.p.at(pslot));
}

size_t TensorElem::max_length() const {
  size_t m = 0;
  for (const auto& [k, c] : terms_) {
    size_t s = 0;
    for (const auto& w : k.p) s += w.size();
    m = std::max(m, s);
  }
  return m;
}

TensorElem TensorElem::map_p_slot(size_t pslot, const std::function<NcPoly(const Word&)>& f) const {
  TensorElem out(P_, sig_);
  for (const auto& [k, c] : terms_) {
    NcPoly img = f(k.p.at(pslot));
    for (const auto& [w, a] : img.terms()) {
      TensorKey k2 = k;
      k2.p[pslot] = w;
      out.add_term(k2, c * a);
    }
  }
  return out;
}

TensorElem TensorElem::filtered(const std::function<bool(const TensorKey&)>& pred) const {
  TensorElem out(P_, sig_);
  for (const auto& [k, c] : terms_)
    if (pred(k)) out.terms_.emplace(k, c);
  return out;
}

TensorElem TensorElem::map_coeffs(const std::function<Scalar(const Scalar&)>& f) const {
  TensorElem out(P_, sig_);
  for (const auto& [k, c] : terms_) out.add_term(k, f(c));
  return out;
}

void TensorElem::check_compatible(const TensorElem& b) const {
  if (sig_ != b.sig_) throw MathError("tensor signature mismatch: " + sig_ + " vs " + b.sig_);
  if (P_ != b.P_) throw MathError("tensor presentation mismatch");
}

TensorElem& TensorElem::operator+=(const TensorElem& b) {
  if (!P_) {
    *this = b;
    return *this;
  }
  if (!b.P_) return *this;
  check_compatible(b);
  for (const auto& [k, c] : b.terms_) add_term(k, c);
  return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& b) { return *this += -b; }

TensorElem operator-(const TensorElem& a) {
  TensorElem out(a.P_, a.sig_.empty() ? "P" : a.sig_);
  if (!a.P_) return a;
  for (const auto& [k, c] : a.terms_) out.terms_.emplace(k, -c);
  return out;
}

TensorElem operator*(const Scalar& c, const TensorElem& t) {
  if (!t.P_) return t;
  TensorElem out(t.P_, t.sig_);
  if (c.is_zero()) return out;
  for (const auto& [k, a] : t.terms_) out.terms_.emplace(k, c * a);
  return out;
}

TensorElem operator*(const NcPoly& a, const TensorElem& t) {
  if (t.sig_.empty() || t.sig_[0] != 'P') throw MathError("left action needs a leading P slot");
  const Presentation& P = *t.P_;
  return t.map_p_slot(0, [&](const Word& w) { return P.normal_form(a * NcPoly::monomial(P.table(), w)); });
}

TensorElem operator*(const TensorElem& t, const NcPoly& a) {
  size_t np = count_p(t.sig_);
  if (np == 0) throw MathError("right action needs a P slot");
  const Presentation& P = *t.P_;
  return t.map_p_slot(np - 1, [&](const Word& w) { return P.normal_form(NcPoly::monomial(P.table(), w) * a); });
}

TensorElem TensorElem::factorwise(const TensorElem& o) const {
  check_compatible(o);
  TensorElem out(P_, sig_);
  const auto& T = P_->table();
  const Grading& G = T->grading();
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) {
      std::vector<NcPoly> ps;
      for (size_t s = 0; s < k1.p.size(); ++s)
        ps.push_back(NcPoly::monomial(T, k1.p[s] + k2.p[s]));
      std::vector<int> hs;
      for (size_t s = 0; s < k1.h.size(); ++s) hs.push_back(G.add(k1.h[s], k2.h[s]));
      out += (c1 * c2) * pure(P_, sig_, ps, hs);
    }
  return out;
}

TensorElem TensorElem::tensor(const TensorElem& o) const {
  if (P_ != o.P_) throw MathError("tensor presentation mismatch");
  TensorElem out(P_, sig_ + o.sig_);
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) {
      TensorKey k = k1;
      k.p.insert(k.p.end(), k2.p.begin(), k2.p.end());
      k.h.insert(k.h.end(), k2.h.begin(), k2.h.end());
      out.add_term(k, c1 * c2);
    }
  return out;
}

std::string TensorElem::to_string() const {
  if (terms_.empty()) return "0";
  const auto& T = *P_->table();
  std::string out;
  for (const auto& [k, c] : terms_) {
    std::string term;
    size_t ip = 0, ih = 0;
    for (size_t s = 0; s < sig_.size(); ++s) {
      if (s) term += " (x) ";
      if (sig_[s] == 'P')
        term += T.word_string(k.p[ip++]);
      else
        term += T.grading().name(k.h[ih++]);
    }
    term = scalar_coefficient_prefix(c) + term;
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

TensorElem TensorElem::parse(PresentationPtr P, const std::string& signature, std::string_view text) {
  check_signature(signature);
  TensorElem out(P, signature);
  detail::PolyParser ps(P->table(), text);
  const Grading& G = P->table()->grading();
  auto read_group = [&]() -> int {
    if (ps.accept("1")) return 0;
    if (G.kind == GroupKind::Z2) {
      ps.expect("g");
      return 1;
    }
    ps.expect("z");
    if (ps.accept("^")) return ps.read_int();
    return 1;
  };
  bool negate = false;
  for (;;) {
    std::vector<NcPoly> pf;
    std::vector<int> hf;
    Scalar sign(negate ? -1 : 1);
    for (size_t s = 0; s < signature.size(); ++s) {
      if (s) ps.expect("(x)");
      if (signature[s] == 'P') {
        pf.push_back(ps.term());
      } else {
        if (s == 0 && ps.accept("-")) sign = -sign;
        hf.push_back(read_group());
      }
    }
    out += sign * pure(P, signature, pf, hf);
    if (ps.at_end()) break;
    if (ps.accept("+"))
      negate = false;
    else if (ps.accept("-"))
      negate = true;
    else
      ps.fail("expected '+' or '-' between tensor terms");
  }
  return out;
}

// ---------------------------------------------------------------- operations

TensorElem d_universal(const PresentationPtr& P, const NcPoly& p) {
  return TensorElem::pure(P, "PP", {P->one(), p}) - TensorElem::pure(P, "PP", {p, P->one()});
}

TensorElem contract_m(const TensorElem& t, size_t slot) {
  const std::string& sig = t.signature();
  if (slot + 1 >= sig.size() || sig[slot] != 'P' || sig[slot + 1] != 'P')
    throw MathError("contract_m: slots " + std::to_string(slot) + "," + std::to_string(slot + 1) + " of " + sig +
                    " are not both P");
  size_t pslot = 0;
  for (size_t s = 0; s < slot; ++s) pslot += sig[s] == 'P';
  std::string sig2 = sig.substr(0, slot) + "P" + sig.substr(slot + 2);
  const PresentationPtr& P = t.presentation();
  TensorElem out(P, sig2);
  for (const auto& [k, c] : t.terms()) {
    NcPoly prod = P->nf_word(k.p[pslot] + k.p[pslot + 1]);
    for (const auto& [w, a] : prod.terms()) {
      TensorKey k2;
      k2.h = k.h;
      for (size_t s = 0; s < k.p.size(); ++s) {
        if (s == pslot)
          k2.p.push_back(w);
        else if (s != pslot + 1)
          k2.p.push_back(k.p[s]);
      }
      out.add_term(k2, c * a);
    }
  }
  return out;
}

TensorElem chi_bar(const TensorElem& t) {
  if (t.signature() != "PP") throw MathError("chi_bar expects P(x)P");
  const PresentationPtr& P = t.presentation();
  const auto& T = *P->table();
  TensorElem out(P, "PH");
  for (const auto& [k, c] : t.terms()) {
    NcPoly prod = P->nf_word(k.p[0] + k.p[1]);
    int g = T.word_degree(k.p[1]);
    for (const auto& [w, a] : prod.terms()) out.add_term(TensorKey{{w}, {g}}, c * a);
  }
  return out;
}

TensorElem coaction(const PresentationPtr& P, const NcPoly& p) {
  NcPoly r = P->normal_form(p);
  TensorElem out(P, "PH");
  for (const auto& [w, c] : r.terms()) out.add_term(TensorKey{{w}, {P->table()->word_degree(w)}}, c);
  return out;
}

std::string space_name(Space s) {
  switch (s) {
    case Space::Omega1P: return "Omega1P";
    case Space::BotP: return "BotP";
    case Space::Omega1B_P: return "Omega1B_P";
  }
  return "?";
}

bool membership(const TensorElem& t, Space space) {
  if (t.signature() != "PP") throw MathError("membership expects P(x)P");
  bool kernel = contract_m(t, 0).is_zero();
  bool bot = true;
  for (const auto& [k, c] : t.terms())
    if (t.p_slot_degree(k, 0) != 0) bot = false;
  switch (space) {
    case Space::Omega1P: return kernel;
    case Space::BotP: return bot;
    case Space::Omega1B_P: return kernel && bot;
  }
  return false;
}

}  // namespace hopfgal
