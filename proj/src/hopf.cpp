#include "hopfgal/hopf.hpp"

namespace hopfgal {

std::string group_algebra_string(const Grading& G, const GroupAlgebraElem& h) {
  std::string out;
  for (const auto& [g, c] : h) {
    if (c.is_zero()) continue;
    std::string term = scalar_coefficient_prefix(c) + G.name(g);
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

TensorElem GroupHopf::coproduct(const PresentationPtr& P, int g) const {
  TensorElem out(P, "HH");
  out.add_term(TensorKey{{}, {grading.reduce(g), grading.reduce(g)}}, Scalar(1));
  return out;
}

TensorElem GroupHopf::ad_R(const PresentationPtr& P, int g) const {
  TensorElem out(P, "HH");
  // g_(2) S(g_(1)) g_(3) collapses to e for abelian groups.
  out.add_term(TensorKey{{}, {grading.reduce(g), 0}}, Scalar(1));
  return out;
}

HopfStructure::HopfStructure(PresentationPtr P) : P_(std::move(P)) {
  size_t n = P_->table()->size();
  delta_.resize(n);
  eps_.resize(n);
  S_.resize(n);
  pi_.resize(n);
}

void HopfStructure::set_coproduct(int gen, TensorElem value) {
  if (value.signature() != "PP") throw MathError("coproduct must land in P(x)P");
  delta_.at(gen) = std::move(value);
}
void HopfStructure::set_counit(int gen, Scalar value) { eps_.at(gen) = std::move(value); }
void HopfStructure::set_antipode(int gen, NcPoly value) { S_.at(gen) = P_->normal_form(value); }
void HopfStructure::set_projection(int gen, int group_element) { pi_.at(gen) = group_element; }

TensorElem HopfStructure::coproduct(const NcPoly& p) const {
  TensorElem out(P_, "PP");
  for (const auto& [w, c] : p.terms()) {
    TensorElem acc = TensorElem::pure(P_, "PP", {P_->one(), P_->one()});
    for (unsigned char x : w) {
      if (!delta_[x]) throw MathError("coproduct undefined on " + P_->table()->name(x));
      acc = acc.factorwise(*delta_[x]);
    }
    out += c * acc;
  }
  return out;
}

Scalar HopfStructure::counit(const NcPoly& p) const {
  Scalar out;
  for (const auto& [w, c] : p.terms()) {
    Scalar acc = c;
    for (unsigned char x : w) {
      if (!eps_[x]) throw MathError("counit undefined on " + P_->table()->name(x));
      acc *= *eps_[x];
    }
    out += acc;
  }
  return out;
}

NcPoly HopfStructure::antipode(const NcPoly& p) const {
  NcPoly out(P_->table());
  for (const auto& [w, c] : p.terms()) {
    NcPoly acc = P_->scalar(c);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      unsigned char x = *it;
      if (!S_[x]) throw MathError("antipode undefined on " + P_->table()->name(x));
      acc = P_->mul(acc, *S_[x]);
    }
    out += acc;
  }
  return out;
}

GroupAlgebraElem HopfStructure::pi_I(const NcPoly& p) const {
  const Grading& G = P_->table()->grading();
  GroupAlgebraElem out;
  for (const auto& [w, c] : p.terms()) {
    int g = 0;
    bool zero = false;
    for (unsigned char x : w) {
      if (!pi_[x]) {
        zero = true;
        break;
      }
      g += *pi_[x];
    }
    if (zero) continue;
    auto& slot = out[G.reduce(g)];
    slot += c;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

int HopfStructure::generator_projecting_to(int g) const {
  for (size_t k = 0; k < pi_.size(); ++k)
    if (pi_[k] && *pi_[k] == g) return static_cast<int>(k);
  return -1;
}

std::vector<std::string> HopfStructure::verify() const {
  std::vector<std::string> failures;
  const auto& T = *P_->table();
  auto id_tensor_eps = [&](const TensorElem& t, size_t kill) {
    // Applies eps to P slot `kill` of a P(x)P element and returns the surviving slot as a poly.
    NcPoly out(P_->table());
    for (const auto& [k, c] : t.terms()) {
      Scalar e = counit(NcPoly::monomial(P_->table(), k.p[kill]));
      out.add_term(k.p[1 - kill], c * e);
    }
    return out;
  };
  for (size_t g = 0; g < T.size(); ++g) {
    NcPoly x = NcPoly::generator(P_->table(), T.name(static_cast<int>(g)));
    std::string n = T.name(static_cast<int>(g));
    try {
      TensorElem D = coproduct(x);
      if (!(id_tensor_eps(D, 0) == x)) failures.push_back("(eps (x) id) Delta != id on " + n);
      if (!(id_tensor_eps(D, 1) == x)) failures.push_back("(id (x) eps) Delta != id on " + n);
      NcPoly left(P_->table()), right(P_->table());
      for (const auto& [k, c] : D.terms()) {
        NcPoly a = NcPoly::monomial(P_->table(), k.p[0]);
        NcPoly b = NcPoly::monomial(P_->table(), k.p[1]);
        left += c * P_->mul(antipode(a), b);
        right += c * P_->mul(a, antipode(b));
      }
      NcPoly e = P_->scalar(counit(x));
      if (!(left == e)) failures.push_back("m (S (x) id) Delta != eps on " + n);
      if (!(right == e)) failures.push_back("m (id (x) S) Delta != eps on " + n);
    } catch (const MathError& err) {
      failures.push_back(std::string("structure map incomplete: ") + err.what());
    }
  }
  for (const auto& rel : P_->relations()) {
    if (!coproduct(rel).is_zero()) failures.push_back("Delta does not vanish on relation " + rel.to_string());
    if (!counit(rel).is_zero()) failures.push_back("eps does not vanish on relation " + rel.to_string());
    if (!antipode(rel).is_zero()) failures.push_back("S does not vanish on relation " + rel.to_string());
    if (!pi_I(rel).empty()) failures.push_back("pi_I does not vanish on relation " + rel.to_string());
  }
  return failures;
}

}  // namespace hopfgal
