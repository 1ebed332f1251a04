#include "peakval/distributions.hpp"

namespace peakval {

Statistic parse_statistic(const std::string& name) {
  if (name == "peak" || name == "Peak") return Statistic::peak;
  if (name == "valley" || name == "val" || name == "Val") return Statistic::valley;
  if (name == "tilde-peak" || name == "tildePeak") return Statistic::tilde_peak;
  if (name == "tilde-valley" || name == "tildeVal") return Statistic::tilde_valley;
  throw std::invalid_argument("unknown statistic: " + name);
}

std::string to_string(Statistic s) {
  switch (s) {
    case Statistic::peak: return "peak";
    case Statistic::valley: return "valley";
    case Statistic::tilde_peak: return "tilde-peak";
    case Statistic::tilde_valley: return "tilde-valley";
  }
  return "?";
}

void SetPolynomial::add(IndexSet s, std::uint64_t coefficient) {
  if (coefficient) terms_[s] += coefficient;
}

void SetPolynomial::add(const SetPolynomial& other) {
  for (const auto& [s, c] : other.terms_) add(s, c);
}

std::uint64_t SetPolynomial::coefficient(IndexSet s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? 0 : it->second;
}

std::uint64_t SetPolynomial::total() const {
  std::uint64_t sum = 0;
  for (const auto& [s, c] : terms_) sum += c;
  return sum;
}

void JointSetPolynomial::add(IndexSet a, IndexSet b, std::uint64_t coefficient) {
  if (coefficient) terms_[{a, b}] += coefficient;
}

void JointSetPolynomial::add(const JointSetPolynomial& other) {
  for (const auto& [k, c] : other.terms_) add(k.first, k.second, c);
}

std::uint64_t JointSetPolynomial::coefficient(IndexSet a, IndexSet b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? 0 : it->second;
}

std::uint64_t JointSetPolynomial::total() const {
  std::uint64_t sum = 0;
  for (const auto& [k, c] : terms_) sum += c;
  return sum;
}

JointSetPolynomial JointSetPolynomial::swapped() const {
  JointSetPolynomial out;
  for (const auto& [k, c] : terms_) out.add(k.second, k.first, c);
  return out;
}

SetPolynomial JointSetPolynomial::first_marginal() const {
  SetPolynomial out;
  for (const auto& [k, c] : terms_) out.add(k.first, c);
  return out;
}

SetPolynomial JointSetPolynomial::second_marginal() const {
  SetPolynomial out;
  for (const auto& [k, c] : terms_) out.add(k.second, c);
  return out;
}

SetPolynomial restrict(const SetPolynomial& p, IndexSet keep) {
  SetPolynomial out;
  for (const auto& [s, c] : p.terms()) out.add(s & keep, c);
  return out;
}

namespace {

void append_monomial(std::string& out, IndexSet s, char variable, bool& first_factor) {
  for (int e : s.elements()) {
    if (!first_factor) out += '*';
    out += variable;
    out += std::to_string(e);
    first_factor = false;
  }
}

void append_term(std::string& out, std::uint64_t c, IndexSet a, char va, IndexSet b, char vb) {
  if (!out.empty()) out += " + ";
  bool first_factor = true;
  if (c != 1 || (a.empty() && b.empty())) {
    out += std::to_string(c);
    first_factor = false;
  }
  append_monomial(out, a, va, first_factor);
  append_monomial(out, b, vb, first_factor);
}

}  // namespace

std::string render(const SetPolynomial& p, char variable) {
  std::string out;
  for (const auto& [s, c] : p.terms()) append_term(out, c, s, variable, IndexSet{}, variable);
  return out.empty() ? "0" : out;
}

std::string render(const JointSetPolynomial& p, char first, char second) {
  std::string out;
  for (const auto& [k, c] : p.terms()) append_term(out, c, k.first, first, k.second, second);
  return out.empty() ? "0" : out;
}

}  // namespace peakval
