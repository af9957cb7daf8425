#pragma once

// Control spaces as finite graphs: metrics, regions, boundary decompositions,
// covering maps, cell complexes, aggregation (dimensional reduction) maps and
// discrete deformations.  Sites are dense integer indices; human-readable
// labels live in a side table.  All values are immutable once built.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qca {

using Site = int;

class ControlGraph {
public:
    ControlGraph(int n_sites, std::vector<std::pair<Site, Site>> edges,
                 std::vector<std::uint64_t> dims,
                 std::vector<std::string> labels = {});

    int size() const { return n_; }
    const std::vector<std::pair<Site, Site>>& edges() const { return edges_; }
    const std::vector<Site>& neighbors(Site x) const { return adj_[x]; }
    std::uint64_t dim(Site x) const { return dims_[x]; }
    const std::vector<std::uint64_t>& dims() const { return dims_; }
    const std::string& label(Site x) const { return labels_[x]; }
    bool connected() const { return connected_; }

    // graph distance with unit edge lengths (BFS, cached)
    int dist(Site a, Site b) const;
    int dist(Site a, const std::vector<Site>& set) const;
    std::vector<Site> ball(Site center, int radius) const;
    int diameter_of(const std::vector<Site>& set) const;
    int eccentricity(Site a, const std::vector<Site>& set) const;

    std::uint64_t total_dim() const;

    // structured coordinates when built by a constructor below
    enum class Kind { Generic, Cycle, Torus, MobiusBand, Tadpole };
    Kind kind = Kind::Generic;
    int Lx = 0, Ly = 0; // cycle: Lx; torus: Lx,Ly; band: Lx along core, Ly across

    Site torus_site(int x, int y) const; // valid for Kind::Torus / MobiusBand

private:
    int n_;
    std::vector<std::pair<Site, Site>> edges_;
    std::vector<std::uint64_t> dims_;
    std::vector<std::string> labels_;
    std::vector<std::vector<Site>> adj_;
    bool connected_;
    mutable std::vector<std::vector<int>> dist_cache_; // row per source, lazy
    const std::vector<int>& dist_row(Site a) const;
};

using GraphPtr = std::shared_ptr<const ControlGraph>;

GraphPtr build_cycle(int L, std::uint64_t d);
GraphPtr build_path(int L, std::uint64_t d);
GraphPtr build_torus(int Lx, int Ly, std::uint64_t d);

// F together with its R-relative interior/exterior/boundary split
struct Region {
    GraphPtr graph;
    std::vector<Site> sites; // sorted
    int radius = 1;

    Region(GraphPtr g, std::vector<Site> s, int R);
    bool contains(Site x) const;
};

struct RegionSplit {
    std::vector<Site> interior, exterior, boundary; // partition of V
};

// Int = {x : ball(x,R) subset F}, Ext = {x : ball(x,R) disjoint from F},
// Bd = the rest.
RegionSplit region_split(const Region& F);

// partition of Bd(F) into maximal groups pairwise at distance >= gap
std::vector<std::vector<Site>> boundary_components(const Region& F, int gap);

// circular coarse-graining of Bd(F) for an axis-aligned square region on a
// torus, with the realized distortion constants (both inequalities of the
// bounded-distortion definition are checked exhaustively)
struct BoundaryChart {
    int J = 0;                       // circle positions 1..J (0-based here)
    std::map<Site, int> position;    // Bd(F) site -> position on the circle
    double C = 0, Cprime = 0;        // realized constants, checked <= bounds
};
BoundaryChart boundary_distortion_map(const Region& F);

struct CoveringMap {
    GraphPtr total;
    GraphPtr base;
    std::vector<Site> projection; // total site -> base site
    int degree = 1;
    std::vector<Site> deck;       // generator of cyclic deck group (total -> total)

    std::vector<Site> fiber(Site base_site) const;
};

CoveringMap cyclic_cover(const GraphPtr& base_cycle, int n);
CoveringMap torus_cover(const GraphPtr& base_torus, int nx, int ny);

// Mobius band: w-wide strip of length L with a flip identification.  The
// boundary walk closes into a single circle of length 2L that double-covers
// the core circle; that 2-to-1 cover is returned alongside the band.
struct MobiusBand {
    GraphPtr band;
    GraphPtr boundary_circle; // abstract 2L-cycle carrying the boundary sites
    std::vector<Site> boundary_sites; // band site ids in boundary-circle order
    CoveringMap boundary_to_core;     // degree-2 cover of the core L-cycle
};
MobiusBand mobius_band(int L, int w, std::uint64_t d);

// dimensional reduction descriptor: fibers of a site map X -> G
struct AggregationMap {
    GraphPtr source;
    GraphPtr quotient;                     // one vertex per fiber
    std::vector<Site> fiber_of;            // source site -> quotient vertex
    std::vector<std::vector<Site>> fibers; // quotient vertex -> source sites
    int lipschitz = 0;                     // realized Lipschitz bound of the map

    std::uint64_t fiber_dim(Site q) const;
};

// generic constructor: g maps each source site to a class index 0..k-1;
// quotient edges are induced, dims are fiber products
AggregationMap dimensional_reduction_map(const GraphPtr& X,
                                         const std::vector<int>& g,
                                         const std::vector<std::string>& class_labels = {});

// torus -> cycle reductions (forget one coordinate)
AggregationMap reduce_torus_to_cycle(const GraphPtr& torus, bool keep_x);

// torus -> anti-diagonal circle (fibers x+y = const); detects the class l+m
AggregationMap reduce_torus_to_diagonal(const GraphPtr& torus);

// torus -> tadpole: box rings of L-inf radius < B around the base point form
// the tail, anti-diagonals clear of the box form the loop, the rest is the
// junction.  B = 0 degenerates to the plain diagonal circle reduction.
// Quotient vertices are labelled "a", "b", ... tail-first when B = 2 and the
// loop has three classes, matching the six-segment tadpole.
AggregationMap tadpole_reduction(const GraphPtr& torus, int box_radius);

// Mobius band -> core cycle (collapse the width direction)
AggregationMap reduce_band_to_core(const MobiusBand& mb);

// 2D cell complex on a torus: vertices/edges/faces with boundary maps
struct CellComplex2D {
    GraphPtr graph;   // the torus graph; cells reference its sites
    int Lx = 0, Ly = 0;
    // edge id: 2*(y*Lx+x) for horizontal (x,y)->(x+1,y), +1 for vertical
    int n_edges() const { return 2 * Lx * Ly; }
    int n_faces() const { return Lx * Ly; }
    // oriented boundary of face f as signed edge ids (+: ccw orientation)
    std::vector<std::pair<int, int>> face_boundary(int f) const; // (edge, sign)
    // endpoints (tail, head) of an oriented edge
    std::pair<Site, Site> edge_ends(int e) const;
};
CellComplex2D torus_complex(const GraphPtr& torus);

// discrete deformation f(site, t) with the validity checks of the definition
struct DeformationMap {
    GraphPtr graph;
    std::vector<Site> domain;                 // S
    std::vector<std::vector<Site>> track;     // track[k][t], k indexes domain, t=0..T
    int horizon = 0;
    int R = 1, Rprime = 1;

    // f(i,0)=i, steps <= R', pairs at distance <= R stay <= R'
    void validate() const;
};

// straight-line-ish deformation on a torus moving S onto T by coordinate moves
DeformationMap torus_deformation(const GraphPtr& torus,
                                 const std::vector<Site>& S,
                                 const std::function<Site(Site)>& target,
                                 int R, int Rprime);

} // namespace qca
