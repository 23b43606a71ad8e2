#pragma once

#include <stdexcept>
#include <string>

namespace coxlimits {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define COXLIMITS_DEFINE_ERROR(Name)                                  \
    struct Name : Error {                                             \
        explicit Name(const std::string& msg) : Error(msg) {}         \
    }

// datum
COXLIMITS_DEFINE_ERROR(ParseError);
COXLIMITS_DEFINE_ERROR(InvalidDatum);
COXLIMITS_DEFINE_ERROR(DimensionMismatch);
COXLIMITS_DEFINE_ERROR(IndexOutOfRange);

// rootgen
COXLIMITS_DEFINE_ERROR(CapacityExceeded);
COXLIMITS_DEFINE_ERROR(OnZeroHyperplane);

// dominance
COXLIMITS_DEFINE_ERROR(NotComparable);
COXLIMITS_DEFINE_ERROR(Degenerate);
COXLIMITS_DEFINE_ERROR(BaseNotInTable);

// dihedral
COXLIMITS_DEFINE_ERROR(NotInfiniteDihedral);
COXLIMITS_DEFINE_ERROR(AffinePair);
COXLIMITS_DEFINE_ERROR(DegenerateSeed);
COXLIMITS_DEFINE_ERROR(NoConvergence);

// limits
COXLIMITS_DEFINE_ERROR(EmptySelection);
COXLIMITS_DEFINE_ERROR(IdenticalPoints);
COXLIMITS_DEFINE_ERROR(LeavesChartD);
COXLIMITS_DEFINE_ERROR(NotIsotropic);
COXLIMITS_DEFINE_ERROR(NoHyperbolicPairs);

#undef COXLIMITS_DEFINE_ERROR

}  // namespace coxlimits
