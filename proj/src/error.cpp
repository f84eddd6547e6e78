#include "wtau/error.hpp"

namespace wtau {

CutoffError::CutoffError(int variable, int cutoff)
    : Error("variable q" + std::to_string(variable) + " exceeds cutoff K=" +
            std::to_string(cutoff)),
      variable_(variable),
      cutoff_(cutoff) {}

}  // namespace wtau
