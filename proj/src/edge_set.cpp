#include "c2lab/edge_set.hpp"

#include "c2lab/error.hpp"

namespace c2lab {

namespace {
void check_label(int label) {
  if (label < 1 || label > EdgeSet::kMaxLabel)
    throw Error(ErrorCode::BadIndices, "edge label " + std::to_string(label) + " outside 1..64");
}
}  // namespace

EdgeSet::EdgeSet(std::initializer_list<int> labels) {
  for (int l : labels) insert(l);
}

EdgeSet EdgeSet::from_vector(const std::vector<int>& labels) {
  EdgeSet s;
  for (int l : labels) s.insert(l);
  return s;
}

EdgeSet EdgeSet::range(int n) {
  if (n < 0 || n > kMaxLabel) throw Error(ErrorCode::BadIndices, "edge range too large");
  return EdgeSet(n == 64 ? ~0ull : ((1ull << n) - 1));
}

EdgeSet& EdgeSet::insert(int label) {
  check_label(label);
  bits_ |= 1ull << (label - 1);
  return *this;
}

EdgeSet& EdgeSet::erase(int label) {
  check_label(label);
  bits_ &= ~(1ull << (label - 1));
  return *this;
}

std::vector<int> EdgeSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for (int l : *this) out.push_back(l);
  return out;
}

std::string EdgeSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int l : *this) {
    if (!first) s += ',';
    s += std::to_string(l);
    first = false;
  }
  return s + "}";
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoopContraction: return "SelfLoopContraction";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotPlanar: return "NotPlanar";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::IndexOverlap: return "IndexOverlap";
    case ErrorCode::BadIndices: return "BadIndices";
    case ErrorCode::NotSpanningTree: return "NotSpanningTree";
    case ErrorCode::UnsupportedQ: return "UnsupportedQ";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorCode::DivisibilityViolated: return "DivisibilityViolated";
    case ErrorCode::NotATriangle: return "NotATriangle";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace c2lab
