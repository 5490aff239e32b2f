#include "steenq/simplicial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace steenq {

namespace {

void check_strictly_increasing(const std::vector<VertexId>& v) {
    if (v.empty()) throw std::invalid_argument("simplex must have at least one vertex");
    if (v.front() < 0) throw std::invalid_argument("vertex ids must be nonnegative");
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i - 1] >= v[i])
            throw std::invalid_argument("simplex vertices must be strictly increasing");
    }
}

}  // namespace

Simplex::Simplex(std::vector<VertexId> vertices) : verts_(std::move(vertices)) {
    check_strictly_increasing(verts_);
}

Simplex::Simplex(std::initializer_list<VertexId> vertices)
    : Simplex(std::vector<VertexId>(vertices)) {}

bool Simplex::has_vertex(VertexId v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

Simplex unchecked_simplex(std::vector<VertexId> vertices) {
    return Simplex(Simplex::unchecked_tag{}, std::move(vertices));
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
    // FNV-1a over the vertex words.
    std::size_t h = 1469598103934665603ull;
    for (VertexId v : s.vertices()) {
        h ^= static_cast<std::size_t>(static_cast<unsigned>(v));
        h *= 1099511628211ull;
    }
    return h;
}

Simplex face(const Simplex& x, int i) {
    if (x.dim() < 1) throw std::invalid_argument("a 0-simplex has no faces");
    if (i < 0 || i > x.dim()) throw std::out_of_range("face index out of range");
    std::vector<VertexId> out;
    out.reserve(x.vertex_count() - 1);
    for (std::size_t p = 0; p < x.vertex_count(); ++p)
        if (static_cast<int>(p) != i) out.push_back(x.vertex(p));
    return unchecked_simplex(std::move(out));
}

Simplex face_composite(const Simplex& x, const std::vector<int>& positions) {
    const int n = x.dim();
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (positions[i] < 0 || positions[i] > n)
            throw std::out_of_range("deleted position out of range");
        if (i > 0 && positions[i - 1] >= positions[i])
            throw std::invalid_argument("deleted positions must be strictly ascending");
    }
    if (static_cast<int>(positions.size()) > n)
        throw std::invalid_argument("cannot delete every vertex of a simplex");
    std::vector<VertexId> out;
    out.reserve(x.vertex_count() - positions.size());
    std::size_t next = 0;
    for (std::size_t p = 0; p < x.vertex_count(); ++p) {
        if (next < positions.size() && static_cast<int>(p) == positions[next]) {
            ++next;
            continue;
        }
        out.push_back(x.vertex(p));
    }
    return unchecked_simplex(std::move(out));
}

void Chain::toggle(const Simplex& s) {
    auto [it, inserted] = support.insert(s);
    if (!inserted) support.erase(it);
}

std::vector<Simplex> Chain::sorted_support() const {
    std::vector<Simplex> out(support.begin(), support.end());
    std::sort(out.begin(), out.end());
    return out;
}

void validate_chain(const Chain& c) {
    for (const Simplex& s : c.support)
        if (s.dim() != c.degree)
            throw std::invalid_argument("chain support simplex of wrong dimension");
}

Chain boundary_chain(const Chain& c) {
    Chain out;
    out.degree = c.degree - 1;
    if (c.degree <= 0) return out;
    for (const Simplex& s : c.support)
        for (int i = 0; i <= s.dim(); ++i) out.toggle(face(s, i));
    return out;
}

void Cochain::toggle(const Simplex& s) {
    auto [it, inserted] = support.insert(s);
    if (!inserted) support.erase(it);
}

std::vector<Simplex> Cochain::sorted_support() const {
    std::vector<Simplex> out(support.begin(), support.end());
    std::sort(out.begin(), out.end());
    return out;
}

Cochain operator+(const Cochain& a, const Cochain& b) {
    if (a.degree != b.degree) throw std::invalid_argument("cochain degree mismatch in sum");
    Cochain out = a;
    for (const Simplex& s : b.support) out.toggle(s);
    return out;
}

void validate_cochain(const Cochain& c) {
    if (c.degree < 0 && !c.support.empty())
        throw std::invalid_argument("negative-degree cochain must be zero");
    for (const Simplex& s : c.support)
        if (s.dim() != c.degree)
            throw std::invalid_argument("cochain support simplex of wrong dimension");
}

SimplicialComplex SimplicialComplex::from_maximal_simplices(
    const std::vector<Simplex>& maximal) {
    SimplicialComplex X;
    for (const Simplex& s : maximal) X.insert_closure(s);
    X.freeze();
    return X;
}

void SimplicialComplex::insert(const Simplex& s) {
    const auto d = static_cast<std::size_t>(s.dim());
    if (by_dim_.size() <= d) by_dim_.resize(d + 1);
    by_dim_[d].insert(s);
}

void SimplicialComplex::insert_closure(const Simplex& s) {
    // All nonempty vertex subsets, by bitmask.
    const std::size_t nverts = s.vertex_count();
    if (nverts >= 26) throw std::invalid_argument("maximal simplex dimension too large");
    const unsigned full = (1u << nverts) - 1u;
    for (unsigned mask = 1; mask <= full; ++mask) {
        std::vector<VertexId> verts;
        for (std::size_t p = 0; p < nverts; ++p)
            if (mask & (1u << p)) verts.push_back(s.vertex(p));
        insert(unchecked_simplex(std::move(verts)));
    }
}

void SimplicialComplex::freeze() {
    sorted_.clear();
    sorted_.reserve(by_dim_.size());
    for (const SimplexSet& level : by_dim_) {
        std::vector<Simplex> v(level.begin(), level.end());
        std::sort(v.begin(), v.end());
        sorted_.push_back(std::move(v));
    }
}

std::size_t SimplicialComplex::size() const {
    std::size_t total = 0;
    for (const SimplexSet& level : by_dim_) total += level.size();
    return total;
}

std::size_t SimplicialComplex::size(int dim) const {
    if (dim < 0 || dim > top_dimension()) return 0;
    return by_dim_[static_cast<std::size_t>(dim)].size();
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const {
    static const std::vector<Simplex> kEmpty;
    if (dim < 0 || dim > top_dimension()) return kEmpty;
    return sorted_[static_cast<std::size_t>(dim)];
}

bool SimplicialComplex::contains(const Simplex& s) const {
    if (s.dim() > top_dimension()) return false;
    return by_dim_[static_cast<std::size_t>(s.dim())].contains(s);
}

std::ptrdiff_t SimplicialComplex::index_of(const Simplex& s) const {
    if (!contains(s)) return -1;
    const auto& level = simplices(s.dim());
    auto it = std::lower_bound(level.begin(), level.end(), s);
    return it - level.begin();
}

VertexId SimplicialComplex::min_vertex() const {
    if (empty() || by_dim_[0].empty()) throw std::invalid_argument("empty complex has no vertices");
    return sorted_[0].front().vertex(0);
}

VertexId SimplicialComplex::max_vertex() const {
    if (empty() || by_dim_[0].empty()) throw std::invalid_argument("empty complex has no vertices");
    return sorted_[0].back().vertex(0);
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.by_dim_ == b.by_dim_;
}

bool is_face_closed(const SimplicialComplex& X) {
    for (int d = 1; d <= X.top_dimension(); ++d)
        for (const Simplex& s : X.simplices(d))
            for (int i = 0; i <= d; ++i)
                if (!X.contains(face(s, i))) return false;
    // Every vertex of every simplex must itself be present.
    for (int d = 0; d <= X.top_dimension(); ++d)
        for (const Simplex& s : X.simplices(d))
            for (VertexId v : s.vertices())
                if (!X.contains(Simplex{v})) return false;
    return true;
}

std::vector<Simplex> maximal_simplices(const SimplicialComplex& X) {
    std::vector<Simplex> out;
    for (int d = 0; d <= X.top_dimension(); ++d) {
        SimplexSet with_cofacet;
        for (const Simplex& t : X.simplices(d + 1))
            for (int i = 0; i <= d + 1; ++i) with_cofacet.insert(face(t, i));
        for (const Simplex& s : X.simplices(d))
            if (!with_cofacet.contains(s)) out.push_back(s);
    }
    return out;
}

VertexId VertexMap::operator()(VertexId v) const {
    auto it = assignment.find(v);
    if (it == assignment.end())
        throw std::invalid_argument("vertex " + std::to_string(v) + " has no image");
    return it->second;
}

namespace {

// Image vertex set of s under f, sorted; empty when a vertex repeats.
std::vector<VertexId> image_vertices(const VertexMap& f, const Simplex& s) {
    std::vector<VertexId> img;
    img.reserve(s.vertex_count());
    for (VertexId v : s.vertices()) img.push_back(f(v));
    std::sort(img.begin(), img.end());
    for (std::size_t i = 1; i < img.size(); ++i)
        if (img[i - 1] == img[i]) return {};
    return img;
}

}  // namespace

bool is_simplicial(const VertexMap& f, const SimplicialComplex& source,
                   const SimplicialComplex& target) {
    for (int d = 0; d <= source.top_dimension(); ++d) {
        for (const Simplex& s : source.simplices(d)) {
            std::vector<VertexId> img;
            img.reserve(s.vertex_count());
            for (VertexId v : s.vertices()) img.push_back(f(v));
            std::sort(img.begin(), img.end());
            img.erase(std::unique(img.begin(), img.end()), img.end());
            if (!target.contains(unchecked_simplex(std::move(img)))) return false;
        }
    }
    return true;
}

Chain push_forward(const VertexMap& f, const SimplicialComplex& source,
                   const SimplicialComplex& target, const Chain& c) {
    Chain out;
    out.degree = c.degree;
    for (const Simplex& s : c.support) {
        if (!source.contains(s))
            throw std::invalid_argument("chain support simplex not in the source complex");
        std::vector<VertexId> img = image_vertices(f, s);
        if (img.empty()) continue;  // repeated image vertex, contributes 0
        Simplex t = unchecked_simplex(std::move(img));
        if (!target.contains(t))
            throw std::invalid_argument("vertex map is not simplicial on the support");
        out.toggle(t);
    }
    return out;
}

SimplicialComplex suspension(const SimplicialComplex& X) {
    if (X.empty()) throw std::invalid_argument("suspension of the empty complex");
    const VertexId north = X.max_vertex() + 1;
    const VertexId south = north + 1;
    SimplicialComplex out;
    out.insert(Simplex{north});
    out.insert(Simplex{south});
    for (int d = 0; d <= X.top_dimension(); ++d) {
        for (const Simplex& s : X.simplices(d)) {
            out.insert(s);
            for (VertexId apex : {north, south}) {
                std::vector<VertexId> verts = s.vertices();
                verts.push_back(apex);  // apexes sort last
                out.insert(unchecked_simplex(std::move(verts)));
            }
        }
    }
    out.freeze();
    return out;
}

SimplicialComplex wedge(const SimplicialComplex& X, const SimplicialComplex& Y,
                        VertexId px, VertexId py) {
    if (!X.contains(Simplex{px})) throw std::invalid_argument("basepoint not a vertex of X");
    if (!Y.contains(Simplex{py})) throw std::invalid_argument("basepoint not a vertex of Y");
    const VertexId offset = X.max_vertex() + 1 - Y.min_vertex();
    SimplicialComplex out;
    for (int d = 0; d <= X.top_dimension(); ++d)
        for (const Simplex& s : X.simplices(d)) out.insert(s);
    for (int d = 0; d <= Y.top_dimension(); ++d) {
        for (const Simplex& s : Y.simplices(d)) {
            std::vector<VertexId> verts;
            verts.reserve(s.vertex_count());
            for (VertexId v : s.vertices()) verts.push_back(v == py ? px : v + offset);
            std::sort(verts.begin(), verts.end());
            out.insert(unchecked_simplex(std::move(verts)));
        }
    }
    out.freeze();
    return out;
}

SimplicialComplex wedge(const SimplicialComplex& X, const SimplicialComplex& Y) {
    return wedge(X, Y, X.min_vertex(), Y.min_vertex());
}

}  // namespace steenq
