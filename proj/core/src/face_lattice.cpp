#include "poset_assoc/face_lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "poset_assoc/error.hpp"

namespace poset_assoc {

FVector FaceLattice::rank_counts() const {
  FVector f;
  f.counts.assign(dimension + 1, 0);
  for (const Face& face : faces) ++f.counts.at(face.dimension);
  return f;
}

std::vector<std::vector<std::size_t>> FaceLattice::vertices_below() const {
  std::vector<std::vector<std::size_t>> lower(faces.size());
  for (const auto& [up, down] : covers) lower[up].push_back(down);

  std::vector<std::size_t> order(faces.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return faces[a].dimension < faces[b].dimension;
  });

  std::vector<std::vector<std::size_t>> out(faces.size());
  for (std::size_t f : order) {
    if (faces[f].dimension == 0) {
      out[f] = {f};
      continue;
    }
    std::vector<std::size_t> acc;
    for (std::size_t g : lower[f]) acc.insert(acc.end(), out[g].begin(), out[g].end());
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    out[f] = std::move(acc);
  }
  return out;
}

bool PolygonCensus::contains(std::size_t k) const noexcept {
  return std::find(sizes.begin(), sizes.end(), k) != sizes.end();
}

std::map<std::size_t, std::size_t> PolygonCensus::histogram() const {
  std::map<std::size_t, std::size_t> h;
  for (std::size_t s : sizes) ++h[s];
  return h;
}

FaceLattice face_lattice(const Poset& poset) {
  require_tubable(poset);
  const std::size_t d = poset.size() - 2;
  FaceLattice lattice;
  lattice.dimension = d;
  std::map<Tubing, std::size_t> index;
  for_each_tubing(poset, [&](const Tubing& t) {
    index.emplace(t, lattice.faces.size());
    lattice.faces.push_back({d - t.size(), t});
  });
  // Removing one tube from a tubing gives the face directly above it.
  for (std::size_t i = 0; i < lattice.faces.size(); ++i) {
    const auto& tubes = std::get<Tubing>(lattice.faces[i].id).tubes();
    for (std::size_t skip = 0; skip < tubes.size(); ++skip) {
      std::vector<Tube> rest;
      for (std::size_t k = 0; k < tubes.size(); ++k) {
        if (k != skip) rest.push_back(tubes[k]);
      }
      lattice.covers.emplace_back(index.at(Tubing(std::move(rest))), i);
    }
  }
  std::sort(lattice.covers.begin(), lattice.covers.end());
  return lattice;
}

namespace {

void extend_partitions(ElementSet remaining, OrderedSetPartition& current,
                       std::vector<OrderedSetPartition>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  // Every nonempty submask of the remaining elements may form the next block.
  for (ElementSet block = remaining; block != 0; block = (block - 1) & remaining) {
    current.push_back(block);
    extend_partitions(remaining & ~block, current, out);
    current.pop_back();
  }
}

}  // namespace

FaceLattice permutohedron_lattice(std::size_t n) {
  if (n < 1 || n > 7) throw Error(ErrorCode::TooLarge, "permutohedron lattice supports 1 <= n <= 7");
  std::vector<OrderedSetPartition> partitions;
  OrderedSetPartition scratch;
  extend_partitions(full_set(n), scratch, partitions);
  std::sort(partitions.begin(), partitions.end(),
            [](const OrderedSetPartition& a, const OrderedSetPartition& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });

  FaceLattice lattice;
  lattice.dimension = n - 1;
  std::map<OrderedSetPartition, std::size_t> index;
  for (const auto& p : partitions) {
    index.emplace(p, lattice.faces.size());
    lattice.faces.push_back({n - p.size(), p});
  }
  for (std::size_t i = 0; i < lattice.faces.size(); ++i) {
    const auto& blocks = std::get<OrderedSetPartition>(lattice.faces[i].id);
    for (std::size_t k = 0; k + 1 < blocks.size(); ++k) {
      OrderedSetPartition merged;
      for (std::size_t j = 0; j < blocks.size(); ++j) {
        if (j == k + 1) {
          merged.back() |= blocks[j];
        } else {
          merged.push_back(blocks[j]);
        }
      }
      lattice.covers.emplace_back(index.at(merged), i);
    }
  }
  std::sort(lattice.covers.begin(), lattice.covers.end());
  return lattice;
}

FVector permutohedron_f_vector(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::TooSmall, "permutohedron needs n >= 1");
  // stirling[k] holds S(m, k) for the current row m.
  std::vector<std::uint64_t> stirling(n + 1, 0);
  stirling[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t k = m; k >= 1; --k) stirling[k] = k * stirling[k] + stirling[k - 1];
    stirling[0] = 0;
  }
  FVector f;
  f.counts.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t blocks = n - i;
    std::uint64_t factorial = 1;
    for (std::size_t j = 2; j <= blocks; ++j) factorial *= j;
    f.counts[i] = factorial * stirling[blocks];
  }
  return f;
}

namespace {

using Bits = std::vector<std::uint64_t>;

Bits to_bits(const std::vector<std::size_t>& items, const std::vector<std::size_t>& local,
             std::size_t width) {
  Bits b((width + 63) / 64, 0);
  for (std::size_t v : items) {
    const std::size_t i = local[v];
    b[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  return b;
}

std::size_t common(const Bits& a, const Bits& b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

struct Incidence {
  std::vector<std::size_t> vertices;  // face indices of dimension 0
  std::vector<std::size_t> facets;    // face indices of dimension d - 1
  std::vector<std::size_t> local;     // face index -> position among vertices
  std::vector<Bits> facet_bits;       // vertex set per facet
  std::vector<std::vector<std::size_t>> below;

  explicit Incidence(const FaceLattice& l) : below(l.vertices_below()) {
    local.assign(l.faces.size(), 0);
    for (std::size_t f = 0; f < l.faces.size(); ++f) {
      if (l.faces[f].dimension == 0) {
        local[f] = vertices.size();
        vertices.push_back(f);
      }
    }
    for (std::size_t f = 0; f < l.faces.size(); ++f) {
      if (l.faces[f].dimension + 1 == l.dimension) {
        facets.push_back(f);
        facet_bits.push_back(to_bits(below[f], local, vertices.size()));
      }
    }
  }
};

class LatticeMatcher {
public:
  LatticeMatcher(const FaceLattice& a, const FaceLattice& b) : la_(a), lb_(b), a_(a), b_(b) {
    order_.resize(a_.facets.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      return a_.below[a_.facets[x]].size() > a_.below[a_.facets[y]].size();
    });
    image_.assign(a_.facets.size(), 0);

    // B vertices keyed by the sorted list of facets containing them.
    for (std::size_t v = 0; v < b_.vertices.size(); ++v) {
      b_vertex_by_facets_.emplace(facets_containing(b_, v), v);
    }
    for (std::size_t f = 0; f < lb_.faces.size(); ++f) {
      std::vector<std::size_t> vs;
      for (std::size_t g : b_.below[f]) vs.push_back(b_.local[g]);
      b_faces_.emplace(lb_.faces[f].dimension, std::move(vs));
    }
  }

  bool run() { return assign(0, std::vector<bool>(b_.facets.size(), false)); }

private:
  static std::vector<std::size_t> facets_containing(const Incidence& inc, std::size_t v) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < inc.facets.size(); ++k) {
      if ((inc.facet_bits[k][v / 64] >> (v % 64)) & 1U) out.push_back(k);
    }
    return out;
  }

  bool assign(std::size_t depth, std::vector<bool> used) {
    if (depth == order_.size()) return verify();
    const std::size_t fa = order_[depth];
    const std::size_t deg = a_.below[a_.facets[fa]].size();
    for (std::size_t fb = 0; fb < b_.facets.size(); ++fb) {
      if (used[fb] || b_.below[b_.facets[fb]].size() != deg) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const std::size_t prev = order_[k];
        ok = common(a_.facet_bits[fa], a_.facet_bits[prev]) ==
             common(b_.facet_bits[fb], b_.facet_bits[image_[prev]]);
      }
      if (!ok) continue;
      image_[fa] = fb;
      used[fb] = true;
      if (assign(depth + 1, used)) return true;
      used[fb] = false;
    }
    return false;
  }

  // Completes the facet bijection to vertices and checks every face.
  bool verify() const {
    std::vector<std::size_t> vertex_image(a_.vertices.size());
    std::vector<bool> hit(b_.vertices.size(), false);
    for (std::size_t v = 0; v < a_.vertices.size(); ++v) {
      auto fs = facets_containing(a_, v);
      for (auto& f : fs) f = image_[f];
      std::sort(fs.begin(), fs.end());
      const auto it = b_vertex_by_facets_.find(fs);
      if (it == b_vertex_by_facets_.end() || hit[it->second]) return false;
      hit[it->second] = true;
      vertex_image[v] = it->second;
    }
    for (std::size_t f = 0; f < la_.faces.size(); ++f) {
      std::vector<std::size_t> vs;
      for (std::size_t g : a_.below[f]) vs.push_back(vertex_image[a_.local[g]]);
      std::sort(vs.begin(), vs.end());
      if (b_faces_.count({la_.faces[f].dimension, vs}) == 0) return false;
    }
    return true;
  }

  const FaceLattice& la_;
  const FaceLattice& lb_;
  Incidence a_;
  Incidence b_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::map<std::vector<std::size_t>, std::size_t> b_vertex_by_facets_;
  std::set<std::pair<std::size_t, std::vector<std::size_t>>> b_faces_;
};

}  // namespace

bool lattices_equivalent(const FaceLattice& a, const FaceLattice& b) {
  if (a.dimension != b.dimension || a.rank_counts() != b.rank_counts()) return false;
  if (a.dimension == 0) return true;
  return LatticeMatcher(a, b).run();
}

PolygonCensus two_face_census(const FaceLattice& lattice) {
  PolygonCensus census;
  const auto below = lattice.vertices_below();
  for (std::size_t f = 0; f < lattice.faces.size(); ++f) {
    if (lattice.faces[f].dimension == 2) census.sizes.push_back(below[f].size());
  }
  std::sort(census.sizes.begin(), census.sizes.end());
  return census;
}

PolygonCensus two_face_census(const Poset& poset) {
  require_tubable(poset);
  if (poset.size() < 4) {
    throw Error(ErrorCode::TooSmall, "2-dimensional faces need at least 4 elements");
  }
  return two_face_census(face_lattice(poset));
}

Quotient quotient(const Poset& poset, const Tubing& tubing, ElementSet tube) {
  if (!is_proper_tubing(poset, tubing)) {
    throw Error(ErrorCode::NotATubing, "input is not a proper tubing");
  }
  if (tube != poset.ground_set() && !tubing.contains(Tube{tube})) {
    throw Error(ErrorCode::NotATubing, "quotient tube is not part of the tubing");
  }
  std::vector<ElementSet> children;
  for (const Tube& t : tubing) {
    if (t.members == tube || !is_subset(t.members, tube)) continue;
    const bool maximal = std::none_of(tubing.begin(), tubing.end(), [&](const Tube& u) {
      return u.members != tube && u.members != t.members && is_subset(t.members, u.members) &&
             is_subset(u.members, tube);
    });
    if (maximal) children.push_back(t.members);
  }
  std::vector<ElementSet> classes = children;
  ElementSet loose = tube;
  for (ElementSet c : children) loose &= ~c;
  for_each_member(loose, [&](std::size_t i) { classes.push_back(singleton(i)); });
  std::sort(classes.begin(), classes.end(), [](ElementSet a, ElementSet b) {
    return std::countr_zero(a) < std::countr_zero(b);
  });

  std::vector<std::string> labels;
  for (ElementSet c : classes) {
    std::vector<std::string> names;
    for_each_member(c, [&](std::size_t i) { names.push_back(poset.label(i)); });
    std::sort(names.begin(), names.end());
    std::string joined;
    for (const auto& name : names) joined += (joined.empty() ? "" : "+") + name;
    labels.push_back(std::move(joined));
  }
  std::vector<Relation> rel;
  for (std::size_t a = 0; a < classes.size(); ++a) {
    for (std::size_t b = 0; b < classes.size(); ++b) {
      if (a != b && (poset.up_of(classes[a]) & classes[b]) != 0) rel.emplace_back(a, b);
    }
  }
  try {
    return {Poset(std::move(labels), rel), std::move(classes)};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CyclicRelation) {
      throw Error(ErrorCode::QuotientNotPoset, "contracted relation is cyclic");
    }
    throw;
  }
}

std::vector<Poset> face_product_decomposition(const Poset& poset, const Tubing& tubing) {
  std::vector<Poset> out;
  std::vector<ElementSet> tubes;
  for (const Tube& t : tubing) tubes.push_back(t.members);
  tubes.push_back(poset.ground_set());
  for (ElementSet t : tubes) {
    Quotient q = quotient(poset, tubing, t);
    if (q.poset.size() >= 2) out.push_back(std::move(q.poset));
  }
  return out;
}

}  // namespace poset_assoc
