#include "quadid/barycentric.hpp"

namespace quadid {

std::string to_string(const Location& loc) {
  static constexpr const char* kVertex[] = {"A", "B", "C"};
  static constexpr const char* kEdge[] = {"BC", "CA", "AB"};
  switch (loc.kind) {
    case Location::Kind::Interior:
      return "Interior";
    case Location::Kind::OnEdge:
      return std::string("OnEdge(") + kEdge[static_cast<int>(loc.edge)] + ")";
    case Location::Kind::OnVertex:
      return std::string("OnVertex(") + kVertex[static_cast<int>(loc.vertex)] + ")";
    case Location::Kind::Exterior:
      return "Exterior";
  }
  return "?";
}

}  // namespace quadid
