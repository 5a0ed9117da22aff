// SPDX-License-Identifier: MIT
#ifndef HYPCONE_ERRORS_HPP
#define HYPCONE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hypcone {

/** Base class for every error raised by the library.  Catching this one is
 *  enough to map any library failure onto a usage-error exit path. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

#define HYPCONE_DEFINE_ERROR(NAME)                                            \
    class NAME : public Error {                                               \
    public:                                                                   \
        explicit NAME(const std::string& what_arg)                            \
            : Error(std::string(#NAME) + ": " + what_arg) {}                  \
    }

HYPCONE_DEFINE_ERROR(DisconnectedGraph);
HYPCONE_DEFINE_ERROR(SelfLoop);
HYPCONE_DEFINE_ERROR(DuplicateEdge);
HYPCONE_DEFINE_ERROR(EnumerationCapExceeded);
HYPCONE_DEFINE_ERROR(BudgetExceeded);
HYPCONE_DEFINE_ERROR(VertexNotOnEdges);
HYPCONE_DEFINE_ERROR(ConstructionFailed);
HYPCONE_DEFINE_ERROR(NotATree);
HYPCONE_DEFINE_ERROR(DecompositionMismatch);
HYPCONE_DEFINE_ERROR(MissingTruncationData);
HYPCONE_DEFINE_ERROR(SupportOutsideIndex);
HYPCONE_DEFINE_ERROR(SupportOutsideDomain);
HYPCONE_DEFINE_ERROR(NonConvergence);
HYPCONE_DEFINE_ERROR(IncompleteCover);
HYPCONE_DEFINE_ERROR(EmptyDomain);

#undef HYPCONE_DEFINE_ERROR

} // namespace hypcone

#endif // HYPCONE_ERRORS_HPP
