#pragma once

#include "mycimm/certificate.hpp"
#include "mycimm/dnp.hpp"
#include "mycimm/graph.hpp"
#include "mycimm/mycielski.hpp"

namespace mycimm {

// Turns a distinct-neighbor K_t certificate in g (t >= 2) into a K_{t+1}
// certificate in the m-Mycielskian of g. Terminals become (v_i,0) plus the
// apex; original paths are reused verbatim inside level 0, and every apex
// path alternates between a terminal and its distinct neighbor up the levels:
//   m = 1: (v_i,0) - w
//   m = 2: (v_i,0) - (v_f(i),1) - w
//   m > 2: (v_i,0) - (v_f(i),1) - (v_i,2) - (v_f(i),3) - ... - w
// Vertex ids follow the canonical Mycielski index map.
ImmersionCertificate lift_certificate(const Graph& g, const ImmersionCertificate& cert,
                                      const NeighborAssignment& assign, int m);

// Degenerate K_2 certificate {(v, m-1), w} joined by their apex edge; covers
// hosts whose best clique immersion is a single vertex.
ImmersionCertificate apex_edge_certificate(const Graph& g, int v, int m);

} // namespace mycimm
