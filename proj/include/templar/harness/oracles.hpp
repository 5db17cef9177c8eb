#ifndef TEMPLAR_HARNESS_ORACLES_HPP_
#define TEMPLAR_HARNESS_ORACLES_HPP_

#include <cstddef>
#include <vector>

#include "templar/clique.hpp"
#include "templar/dom.hpp"
#include "templar/equality.hpp"
#include "templar/url.hpp"

namespace templar::harness {

// Literal powerset evaluation of the mutual-clique comprehension: the largest
// subset of processed links that contains `link` and whose distinct members
// are pairwise connected in both directions. Exponential by design; refuses
// more than 16 processed links. Test oracle for SiteGraph::maximal_cs_with.
std::vector<Link> brute_force_cs(const SiteGraph& graph, const Link& link);

// Maximum cardinality over all equal top-down mappings that pair the two
// roots, by exhaustive enumeration of injective child matchings. Refuses
// trees larger than 10 nodes. Test oracle for compute_etdm.
std::size_t brute_force_etdm(const DomTree& t1, const DomTree& t2, const EqualityConfig& cfg);

} // namespace templar::harness

#endif
