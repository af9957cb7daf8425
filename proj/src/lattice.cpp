#include "qca/lattice.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qca {

ControlGraph::ControlGraph(int n_sites, std::vector<std::pair<Site, Site>> edges,
                           std::vector<std::uint64_t> dims,
                           std::vector<std::string> labels)
    : n_(n_sites), edges_(std::move(edges)), dims_(std::move(dims)),
      labels_(std::move(labels)) {
    if (static_cast<int>(dims_.size()) != n_)
        throw std::invalid_argument("ControlGraph: dims size mismatch");
    for (auto d : dims_)
        if (d < 1) throw std::invalid_argument("ControlGraph: dims must be >= 1");
    if (labels_.empty()) {
        labels_.resize(n_);
        for (int i = 0; i < n_; ++i) labels_[i] = std::to_string(i);
    }
    adj_.resize(n_);
    std::set<std::pair<Site, Site>> seen;
    for (auto& [u, v] : edges_) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
            throw std::invalid_argument("ControlGraph: bad edge");
        auto key = std::minmax(u, v);
        if (seen.insert(key).second) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    // connectivity
    std::vector<char> vis(n_, 0);
    std::deque<Site> q;
    if (n_ > 0) { q.push_back(0); vis[0] = 1; }
    int cnt = 0;
    while (!q.empty()) {
        Site x = q.front(); q.pop_front(); ++cnt;
        for (Site y : adj_[x]) if (!vis[y]) { vis[y] = 1; q.push_back(y); }
    }
    connected_ = (cnt == n_);
    dist_cache_.resize(n_);
}

const std::vector<int>& ControlGraph::dist_row(Site a) const {
    auto& row = dist_cache_[a];
    if (!row.empty()) return row;
    row.assign(n_, -1);
    std::deque<Site> q{a};
    row[a] = 0;
    while (!q.empty()) {
        Site x = q.front(); q.pop_front();
        for (Site y : adj_[x]) if (row[y] < 0) { row[y] = row[x] + 1; q.push_back(y); }
    }
    return row;
}

int ControlGraph::dist(Site a, Site b) const {
    int d = dist_row(a)[b];
    if (d < 0) throw std::runtime_error("dist: sites not connected");
    return d;
}

int ControlGraph::dist(Site a, const std::vector<Site>& set) const {
    const auto& row = dist_row(a);
    int best = -1;
    for (Site s : set) if (row[s] >= 0 && (best < 0 || row[s] < best)) best = row[s];
    if (best < 0) throw std::runtime_error("dist: empty or unreachable set");
    return best;
}

std::vector<Site> ControlGraph::ball(Site center, int radius) const {
    const auto& row = dist_row(center);
    std::vector<Site> out;
    for (Site x = 0; x < n_; ++x)
        if (row[x] >= 0 && row[x] <= radius) out.push_back(x);
    return out;
}

int ControlGraph::diameter_of(const std::vector<Site>& set) const {
    int d = 0;
    for (Site a : set) {
        const auto& row = dist_row(a);
        for (Site b : set) d = std::max(d, row[b]);
    }
    return d;
}

int ControlGraph::eccentricity(Site a, const std::vector<Site>& set) const {
    const auto& row = dist_row(a);
    int d = 0;
    for (Site b : set) d = std::max(d, row[b]);
    return d;
}

std::uint64_t ControlGraph::total_dim() const {
    std::uint64_t t = 1;
    for (auto d : dims_) t *= d;
    return t;
}

Site ControlGraph::torus_site(int x, int y) const {
    if (kind != Kind::Torus && kind != Kind::MobiusBand)
        throw std::logic_error("torus_site: graph has no (x,y) coordinates");
    x = ((x % Lx) + Lx) % Lx;
    if (kind == Kind::Torus) y = ((y % Ly) + Ly) % Ly;
    return y * Lx + x;
}

GraphPtr build_cycle(int L, std::uint64_t d) {
    if (L < 3) throw std::invalid_argument("build_cycle: L >= 3 required");
    std::vector<std::pair<Site, Site>> edges;
    for (int i = 0; i < L; ++i) edges.emplace_back(i, (i + 1) % L);
    auto g = std::make_shared<ControlGraph>(L, edges, std::vector<std::uint64_t>(L, d));
    g->kind = ControlGraph::Kind::Cycle;
    g->Lx = L;
    return g;
}

GraphPtr build_path(int L, std::uint64_t d) {
    if (L < 1) throw std::invalid_argument("build_path: L >= 1 required");
    std::vector<std::pair<Site, Site>> edges;
    for (int i = 0; i + 1 < L; ++i) edges.emplace_back(i, i + 1);
    return std::make_shared<ControlGraph>(L, edges, std::vector<std::uint64_t>(L, d));
}

GraphPtr build_torus(int Lx, int Ly, std::uint64_t d) {
    if (Lx < 3 || Ly < 3) throw std::invalid_argument("build_torus: Lx, Ly >= 3");
    const int n = Lx * Ly;
    std::vector<std::pair<Site, Site>> edges;
    std::vector<std::string> labels(n);
    for (int y = 0; y < Ly; ++y)
        for (int x = 0; x < Lx; ++x) {
            Site s = y * Lx + x;
            labels[s] = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
            edges.emplace_back(s, y * Lx + (x + 1) % Lx);
            edges.emplace_back(s, ((y + 1) % Ly) * Lx + x);
        }
    auto g = std::make_shared<ControlGraph>(n, edges, std::vector<std::uint64_t>(n, d),
                                            labels);
    g->kind = ControlGraph::Kind::Torus;
    g->Lx = Lx;
    g->Ly = Ly;
    return g;
}

Region::Region(GraphPtr g, std::vector<Site> s, int R)
    : graph(std::move(g)), sites(std::move(s)), radius(R) {
    std::sort(sites.begin(), sites.end());
    sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
    for (Site x : sites)
        if (x < 0 || x >= graph->size())
            throw std::invalid_argument("Region: site out of range");
}

bool Region::contains(Site x) const {
    return std::binary_search(sites.begin(), sites.end(), x);
}

RegionSplit region_split(const Region& F) {
    RegionSplit out;
    const auto& g = *F.graph;
    for (Site x = 0; x < g.size(); ++x) {
        auto b = g.ball(x, F.radius);
        bool all_in = true, none_in = false;
        int hits = 0;
        for (Site y : b) if (F.contains(y)) ++hits;
        all_in = (hits == static_cast<int>(b.size()));
        none_in = (hits == 0);
        if (all_in && !F.sites.empty()) out.interior.push_back(x);
        else if (none_in) out.exterior.push_back(x);
        else out.boundary.push_back(x);
    }
    if (F.sites.empty()) { // empty region: everything is exterior
        out.exterior.insert(out.exterior.end(), out.interior.begin(), out.interior.end());
        out.interior.clear();
        std::sort(out.exterior.begin(), out.exterior.end());
    }
    return out;
}

std::vector<std::vector<Site>> boundary_components(const Region& F, int gap) {
    if (gap < 2 * F.radius)
        throw std::invalid_argument("boundary_components: gap must be >= 2R");
    auto bd = region_split(F).boundary;
    // union-find over pairs closer than gap
    std::vector<int> parent(bd.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int i) {
        while (parent[i] != i) { parent[i] = parent[parent[i]]; i = parent[i]; }
        return i;
    };
    for (size_t i = 0; i < bd.size(); ++i)
        for (size_t j = i + 1; j < bd.size(); ++j)
            if (F.graph->dist(bd[i], bd[j]) < gap) parent[find(i)] = find(j);
    std::map<int, std::vector<Site>> groups;
    for (size_t i = 0; i < bd.size(); ++i) groups[find(i)].push_back(bd[i]);
    std::vector<std::vector<Site>> out;
    for (auto& [root, sites] : groups) {
        std::sort(sites.begin(), sites.end());
        out.push_back(sites);
    }
    // deterministic order: by smallest member
    std::sort(out.begin(), out.end());
    return out;
}

BoundaryChart boundary_distortion_map(const Region& F) {
    const auto& g = *F.graph;
    if (g.kind != ControlGraph::Kind::Torus)
        throw std::invalid_argument("boundary_distortion_map: torus graph required");
    // recover the bounding box of F and check it is an axis-aligned square
    int x0 = 1 << 30, x1 = -1, y0 = 1 << 30, y1 = -1;
    for (Site s : F.sites) { // assumes F does not wrap
        int x = s % g.Lx, y = s / g.Lx;
        x0 = std::min(x0, x); x1 = std::max(x1, x);
        y0 = std::min(y0, y); y1 = std::max(y1, y);
    }
    const int w = x1 - x0 + 1, h = y1 - y0 + 1;
    if (F.sites.empty() || w != h || w < 2 ||
        static_cast<int>(F.sites.size()) != w * h)
        throw std::invalid_argument("boundary_distortion_map: unsupported region "
                                    "(need a filled axis-aligned square, side >= 2)");
    auto split = region_split(F);
    const int R = F.radius;
    // walk the ring just outside the square counterclockwise; project every
    // boundary site to the nearest ring position
    std::vector<std::pair<int, int>> ring; // (x,y) in ring order
    const int rx0 = x0 - 1, rx1 = x1 + 1, ry0 = y0 - 1, ry1 = y1 + 1;
    for (int x = rx0; x < rx1; ++x) ring.emplace_back(x, ry0);
    for (int y = ry0; y < ry1; ++y) ring.emplace_back(rx1, y);
    for (int x = rx1; x > rx0; --x) ring.emplace_back(x, ry1);
    for (int y = ry1; y > ry0; --y) ring.emplace_back(rx0, y);
    BoundaryChart chart;
    chart.J = static_cast<int>(ring.size());
    auto ring_site = [&](int k) {
        return g.torus_site(ring[k].first, ring[k].second);
    };
    for (Site s : split.boundary) {
        int best = -1, bestd = 1 << 30;
        for (int k = 0; k < chart.J; ++k) {
            int d = g.dist(s, ring_site(k));
            if (d < bestd) { bestd = d; best = k; }
        }
        chart.position[s] = best;
    }
    // realized distortion constants: smallest c with
    //   dist(f(i),f(j)) <= c dist(i,j) + cR  and  dist(i,j) <= c dist(f(i),f(j)) + cR
    // over every site pair (exhaustive)
    auto circ = [&](int a, int b) {
        int d = std::abs(a - b) % chart.J;
        return std::min(d, chart.J - d);
    };
    double c = 1.0;
    for (auto& [s, k] : chart.position)
        for (auto& [t, m] : chart.position) {
            if (s >= t) continue;
            const double dg = g.dist(s, t);
            const double dc = circ(k, m);
            c = std::max(c, dc / (dg + R));
            c = std::max(c, dg / (dc + R));
        }
    chart.C = c;
    chart.Cprime = c;
    if (c > 2.0)
        throw std::runtime_error("boundary_distortion_map: distortion exceeds bound");
    return chart;
}

std::vector<Site> CoveringMap::fiber(Site base_site) const {
    std::vector<Site> out;
    for (Site s = 0; s < total->size(); ++s)
        if (projection[s] == base_site) out.push_back(s);
    return out;
}

CoveringMap cyclic_cover(const GraphPtr& base_cycle, int n) {
    if (base_cycle->kind != ControlGraph::Kind::Cycle)
        throw std::invalid_argument("cyclic_cover: base must be a cycle");
    if (n < 1) throw std::invalid_argument("cyclic_cover: n >= 1");
    const int L = base_cycle->Lx;
    CoveringMap cm;
    cm.base = base_cycle;
    cm.total = build_cycle(L * n, base_cycle->dim(0));
    cm.degree = n;
    cm.projection.resize(L * n);
    cm.deck.resize(L * n);
    for (Site s = 0; s < L * n; ++s) {
        cm.projection[s] = s % L;
        cm.deck[s] = (s + L) % (L * n);
    }
    return cm;
}

CoveringMap torus_cover(const GraphPtr& base_torus, int nx, int ny) {
    if (base_torus->kind != ControlGraph::Kind::Torus)
        throw std::invalid_argument("torus_cover: base must be a torus");
    if (nx < 1 || ny < 1) throw std::invalid_argument("torus_cover: nx, ny >= 1");
    const int Lx = base_torus->Lx, Ly = base_torus->Ly;
    CoveringMap cm;
    cm.base = base_torus;
    cm.total = build_torus(Lx * nx, Ly * ny, base_torus->dim(0));
    cm.degree = nx * ny;
    const int N = cm.total->size();
    cm.projection.resize(N);
    cm.deck.resize(N);
    for (int y = 0; y < Ly * ny; ++y)
        for (int x = 0; x < Lx * nx; ++x) {
            Site s = y * (Lx * nx) + x;
            cm.projection[s] = (y % Ly) * Lx + (x % Lx);
            // deck generator: translate by (Lx, 0), then (0, Ly) when nx == 1
            int dx = nx > 1 ? Lx : 0, dy = nx > 1 ? 0 : Ly;
            cm.deck[s] = ((y + dy) % (Ly * ny)) * (Lx * nx) + (x + dx) % (Lx * nx);
        }
    return cm;
}

MobiusBand mobius_band(int L, int w, std::uint64_t d) {
    if (L % 2 != 0) throw std::invalid_argument("mobius_band: L must be even");
    if (L < 4 || w < 2) throw std::invalid_argument("mobius_band: L >= 4, w >= 2");
    const int n = L * w;
    std::vector<std::pair<Site, Site>> edges;
    std::vector<std::string> labels(n);
    auto id = [&](int u, int v) { return v * L + u; };
    for (int v = 0; v < w; ++v)
        for (int u = 0; u < L; ++u) {
            labels[id(u, v)] = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
            if (u + 1 < L) edges.emplace_back(id(u, v), id(u + 1, v));
            else edges.emplace_back(id(u, v), id(0, w - 1 - v)); // flip seam
            if (v + 1 < w) edges.emplace_back(id(u, v), id(u, v + 1));
        }
    MobiusBand mb;
    auto band = std::make_shared<ControlGraph>(n, edges, std::vector<std::uint64_t>(n, d),
                                               labels);
    band->kind = ControlGraph::Kind::MobiusBand;
    band->Lx = L;
    band->Ly = w;
    mb.band = band;
    // boundary walk: row 0 forward, seam to row w-1, row w-1 forward, seam back
    for (int u = 0; u < L; ++u) mb.boundary_sites.push_back(id(u, 0));
    for (int u = 0; u < L; ++u) mb.boundary_sites.push_back(id(u, w - 1));
    mb.boundary_circle = build_cycle(2 * L, d);
    CoveringMap cm;
    cm.base = build_cycle(L, d);
    cm.total = mb.boundary_circle;
    cm.degree = 2;
    cm.projection.resize(2 * L);
    cm.deck.resize(2 * L);
    for (int k = 0; k < 2 * L; ++k) {
        cm.projection[k] = k % L;
        cm.deck[k] = (k + L) % (2 * L);
    }
    mb.boundary_to_core = cm;
    return mb;
}

AggregationMap dimensional_reduction_map(const GraphPtr& X, const std::vector<int>& g,
                                         const std::vector<std::string>& class_labels) {
    if (static_cast<int>(g.size()) != X->size())
        throw std::invalid_argument("dimensional_reduction_map: size mismatch");
    int k = 0;
    for (int c : g) {
        if (c < 0) throw std::invalid_argument("dimensional_reduction_map: bad class");
        k = std::max(k, c + 1);
    }
    AggregationMap am;
    am.source = X;
    am.fiber_of = g;
    am.fibers.resize(k);
    for (Site s = 0; s < X->size(); ++s) am.fibers[g[s]].push_back(s);
    for (auto& f : am.fibers)
        if (f.empty()) throw std::invalid_argument("dimensional_reduction_map: empty fiber");
    std::vector<std::uint64_t> qdims(k, 1);
    for (Site s = 0; s < X->size(); ++s) qdims[g[s]] *= X->dim(s);
    std::set<std::pair<Site, Site>> qedges;
    int lip = 0;
    for (auto& [u, v] : X->edges())
        if (g[u] != g[v]) {
            qedges.insert(std::minmax(g[u], g[v]));
            lip = 1;
        }
    am.lipschitz = lip;
    std::vector<std::pair<Site, Site>> qe(qedges.begin(), qedges.end());
    auto q = std::make_shared<ControlGraph>(
        k, qe, qdims,
        class_labels.empty() ? std::vector<std::string>{} : class_labels);
    am.quotient = q;
    return am;
}

std::uint64_t AggregationMap::fiber_dim(Site q) const { return quotient->dim(q); }

AggregationMap reduce_torus_to_cycle(const GraphPtr& torus, bool keep_x) {
    if (torus->kind != ControlGraph::Kind::Torus)
        throw std::invalid_argument("reduce_torus_to_cycle: torus required");
    std::vector<int> g(torus->size());
    for (Site s = 0; s < torus->size(); ++s)
        g[s] = keep_x ? (s % torus->Lx) : (s / torus->Lx);
    auto am = dimensional_reduction_map(torus, g);
    auto cyc = std::const_pointer_cast<ControlGraph>(am.quotient);
    cyc->kind = ControlGraph::Kind::Cycle;
    cyc->Lx = keep_x ? torus->Lx : torus->Ly;
    return am;
}

AggregationMap reduce_torus_to_diagonal(const GraphPtr& torus) {
    if (torus->kind != ControlGraph::Kind::Torus)
        throw std::invalid_argument("reduce_torus_to_diagonal: torus required");
    if (torus->Lx != torus->Ly)
        throw std::invalid_argument("reduce_torus_to_diagonal: square torus required");
    const int L = torus->Lx;
    std::vector<int> g(torus->size());
    for (Site s = 0; s < torus->size(); ++s)
        g[s] = (s % L + s / L) % L;
    auto am = dimensional_reduction_map(torus, g);
    auto cyc = std::const_pointer_cast<ControlGraph>(am.quotient);
    cyc->kind = ControlGraph::Kind::Cycle;
    cyc->Lx = L;
    return am;
}

AggregationMap tadpole_reduction(const GraphPtr& torus, int box_radius) {
    if (torus->kind != ControlGraph::Kind::Torus)
        throw std::invalid_argument("tadpole_reduction: torus required");
    if (torus->Lx != torus->Ly)
        throw std::invalid_argument("tadpole_reduction: square torus required");
    const int L = torus->Lx;
    const int B = box_radius;
    if (B < 0 || L - 4 * B - 1 < 1)
        throw std::invalid_argument("tadpole_reduction: box too large for torus");
    if (B == 0) return reduce_torus_to_diagonal(torus);
    auto dd = [&](int u) { return std::min(u, L - u); };
    // classes: 0..B-1 tail rings (0 = base point), B = junction,
    // B+1..B+(L-4B-1) = free anti-diagonals c = 2B+1..L-2B-1
    const int n_loop = L - 4 * B - 1;
    std::vector<int> g(torus->size());
    for (Site s = 0; s < torus->size(); ++s) {
        const int x = s % L, y = s / L;
        const int rho = std::max(dd(x), dd(y));
        const int c = (x + y) % L;
        if (rho < B) g[s] = rho;
        else if (rho == B || c <= 2 * B || c >= L - 2 * B) g[s] = B;
        else g[s] = B + 1 + (c - 2 * B - 1);
    }
    std::vector<std::string> labels(B + 1 + n_loop);
    const char* alpha = "abcdefghijklmnopqrstuvwxyz";
    for (size_t i = 0; i < labels.size(); ++i)
        labels[i] = i < 26 ? std::string(1, alpha[i]) : "v" + std::to_string(i);
    auto am = dimensional_reduction_map(torus, g, labels);
    auto q = std::const_pointer_cast<ControlGraph>(am.quotient);
    q->kind = ControlGraph::Kind::Tadpole;
    return am;
}

AggregationMap reduce_band_to_core(const MobiusBand& mb) {
    const auto& band = *mb.band;
    std::vector<int> g(band.size());
    for (Site s = 0; s < band.size(); ++s) g[s] = s % band.Lx;
    auto am = dimensional_reduction_map(mb.band, g);
    auto cyc = std::const_pointer_cast<ControlGraph>(am.quotient);
    cyc->kind = ControlGraph::Kind::Cycle;
    cyc->Lx = band.Lx;
    return am;
}

std::vector<std::pair<int, int>> CellComplex2D::face_boundary(int f) const {
    const int x = f % Lx, y = f / Lx;
    auto he = [&](int xx, int yy) { return 2 * ((yy % Ly) * Lx + (xx % Lx)); };
    auto ve = [&](int xx, int yy) { return 2 * ((yy % Ly) * Lx + (xx % Lx)) + 1; };
    // counterclockwise: bottom, right, top (reversed), left (reversed)
    return {{he(x, y), +1}, {ve(x + 1, y), +1}, {he(x, y + 1), -1}, {ve(x, y), -1}};
}

std::pair<Site, Site> CellComplex2D::edge_ends(int e) const {
    const int s = e / 2, horiz = (e % 2 == 0);
    const int x = s % Lx, y = s / Lx;
    if (horiz) return {s, y * Lx + (x + 1) % Lx};
    return {s, ((y + 1) % Ly) * Lx + x};
}

CellComplex2D torus_complex(const GraphPtr& torus) {
    if (torus->kind != ControlGraph::Kind::Torus)
        throw std::invalid_argument("torus_complex: torus required");
    CellComplex2D cc;
    cc.graph = torus;
    cc.Lx = torus->Lx;
    cc.Ly = torus->Ly;
    return cc;
}

void DeformationMap::validate() const {
    if (track.size() != domain.size())
        throw std::invalid_argument("DeformationMap: track/domain mismatch");
    for (size_t k = 0; k < domain.size(); ++k) {
        if (static_cast<int>(track[k].size()) != horizon + 1 || track[k][0] != domain[k])
            throw std::invalid_argument("DeformationMap: track must start at the site");
        for (int t = 0; t < horizon; ++t)
            if (graph->dist(track[k][t], track[k][t + 1]) > Rprime)
                throw std::invalid_argument("DeformationMap: step exceeds R'");
    }
    for (size_t a = 0; a < domain.size(); ++a)
        for (size_t b = a + 1; b < domain.size(); ++b) {
            if (graph->dist(domain[a], domain[b]) > R) continue;
            for (int t = 0; t <= horizon; ++t)
                if (graph->dist(track[a][t], track[b][t]) > Rprime)
                    throw std::invalid_argument("DeformationMap: pair separates beyond R'");
        }
}

DeformationMap torus_deformation(const GraphPtr& torus, const std::vector<Site>& S,
                                 const std::function<Site(Site)>& target,
                                 int R, int Rprime) {
    if (torus->kind != ControlGraph::Kind::Torus)
        throw std::invalid_argument("torus_deformation: torus required");
    const int Lx = torus->Lx, Ly = torus->Ly;
    DeformationMap dm;
    dm.graph = torus;
    dm.domain = S;
    dm.R = R;
    dm.Rprime = Rprime;
    // move x toward target x (shorter way), then y; one unit per step
    auto step_toward = [](int a, int b, int L) {
        if (a == b) return a;
        int fwd = ((b - a) % L + L) % L;
        return fwd <= L - fwd ? (a + 1) % L : (a - 1 + L) % L;
    };
    int T = 0;
    std::vector<std::vector<Site>> tracks;
    for (Site s : S) {
        std::vector<Site> tr{s};
        Site cur = s;
        const Site tgt = target(s);
        while (cur != tgt) {
            int x = cur % Lx, y = cur / Lx;
            const int tx = tgt % Lx, ty = tgt / Lx;
            if (x != tx) x = step_toward(x, tx, Lx);
            else y = step_toward(y, ty, Ly);
            cur = y * Lx + x;
            tr.push_back(cur);
        }
        T = std::max<int>(T, static_cast<int>(tr.size()) - 1);
        tracks.push_back(std::move(tr));
    }
    for (auto& tr : tracks) while (static_cast<int>(tr.size()) < T + 1) tr.push_back(tr.back());
    dm.track = std::move(tracks);
    dm.horizon = T;
    return dm;
}

} // namespace qca
