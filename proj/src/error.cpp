#include "ulab/error.hpp"

namespace ulab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kLoop: return "loop";
    case ErrorKind::kDuplicateEdge: return "duplicate_edge";
    case ErrorKind::kMalformed: return "malformed";
    case ErrorKind::kVertexOutOfRange: return "vertex_out_of_range";
    case ErrorKind::kInvalidParameter: return "invalid_parameter";
    case ErrorKind::kNotATree: return "not_a_tree";
    case ErrorKind::kNotRegular: return "not_regular";
    case ErrorKind::kPartialLabeling: return "partial_labeling";
    case ErrorKind::kCapExceeded: return "cap_exceeded";
    case ErrorKind::kStrategyInapplicable: return "strategy_inapplicable";
    case ErrorKind::kNoLegalLabel: return "no_legal_label";
    case ErrorKind::kIllegalMove: return "illegal_move";
  }
  return "unknown";
}

}  // namespace ulab
