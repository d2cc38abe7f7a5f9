#include "minorforge/vertex_set.hpp"

#include <algorithm>

#include "minorforge/error.hpp"

namespace minorforge {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorCode::NotAClique: return "NotAClique";
    case ErrorCode::AlphaTooLarge: return "AlphaTooLarge";
    case ErrorCode::WrongOrder: return "WrongOrder";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::OddGroundSet: return "OddGroundSet";
    case ErrorCode::RejectionExhausted: return "RejectionExhausted";
    case ErrorCode::NotEnoughEdges: return "NotEnoughEdges";
    case ErrorCode::NonpositiveDenominator: return "NonpositiveDenominator";
    case ErrorCode::InvalidHypotheses: return "InvalidHypotheses";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::Ineligible: return "Ineligible";
    case ErrorCode::SeagullFailure: return "SeagullFailure";
    case ErrorCode::NotCertifiable: return "NotCertifiable";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(int universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  s.trim();
  return s;
}

void VertexSet::trim() noexcept {
  const int rem = universe_ % kWordBits;
  if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
}

void VertexSet::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

int VertexSet::size() const noexcept {
  int c = 0;
  for (Word w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

int VertexSet::intersection_size(const VertexSet& other) const noexcept {
  int c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
  return c;
}

Vertex VertexSet::next(Vertex from) const noexcept {
  if (from < 0) from = 0;
  if (from >= universe_) return -1;
  std::size_t wi = static_cast<std::size_t>(from) / kWordBits;
  Word w = words_[wi] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (w != 0) return static_cast<Vertex>(wi * kWordBits + std::countr_zero(w));
    if (++wi == words_.size()) return -1;
    w = words_[wi];
  }
}

VertexSet& VertexSet::operator&=(const VertexSet& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet s(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
  s.trim();
  return s;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Vertex v : *this) out.push_back(v);
  return out;
}

bool VertexSet::lex_less(const VertexSet& a, const VertexSet& b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace minorforge
