#pragma once

#include <stdexcept>
#include <string>

namespace scmc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SCMC_ERROR(Name)                 \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  };

SCMC_ERROR(DegreeError)
SCMC_ERROR(DegenerateError)
SCMC_ERROR(RealityViolation)
SCMC_ERROR(BranchAmbiguity)
SCMC_ERROR(PoleError)
SCMC_ERROR(BranchProximity)
SCMC_ERROR(DomainError)
SCMC_ERROR(PreconditionError)
SCMC_ERROR(SingularVectorField)
SCMC_ERROR(SymSingularity)
SCMC_ERROR(NotSimple)
SCMC_ERROR(StrategyError)
SCMC_ERROR(StepRejected)
SCMC_ERROR(JumpObstruction)
SCMC_ERROR(DivisionResidual)
SCMC_ERROR(SelectionError)
SCMC_ERROR(IntegratorDrift)
SCMC_ERROR(GaugeError)
SCMC_ERROR(NotPeriodic)
SCMC_ERROR(PeriodNotFound)
SCMC_ERROR(ParseError)

#undef SCMC_ERROR

}  // namespace scmc
