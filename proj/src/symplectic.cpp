#include "spinext/symplectic.hpp"

#include <bit>
#include <unordered_map>
#include <utility>

#include "spinext/errors.hpp"

namespace spinext {

namespace {

constexpr F2Vec::Word kEvenBits = 0x5555555555555555ULL;

// Swaps each (a_i, b_i) bit pair; omega(x, y) = <x, swap(y)>.
F2Vec::Word swap_pairs(F2Vec::Word w) { return ((w & kEvenBits) << 1) | ((w >> 1) & kEvenBits); }

void require_space_dim(const SymplecticSpace& space, const F2Vec& v, const char* op) {
  if (v.dim() != space.dim()) {
    throw DimensionMismatch(std::string(op) + ": vector dim " + std::to_string(v.dim()) +
                            " != 2g = " + std::to_string(space.dim()));
  }
}

}  // namespace

SymplecticSpace::SymplecticSpace(std::size_t genus) : genus_(genus) {
  if (genus < 1) throw InvalidArgument("genus must be >= 1");
}

F2Vec SymplecticSpace::a(std::size_t i) const {
  if (i < 1 || i > genus_) throw InvalidArgument("a_i index out of range");
  return F2Vec::unit(dim(), 2 * (i - 1));
}

F2Vec SymplecticSpace::b(std::size_t i) const {
  if (i < 1 || i > genus_) throw InvalidArgument("b_i index out of range");
  return F2Vec::unit(dim(), 2 * (i - 1) + 1);
}

bool omega(const SymplecticSpace& space, const F2Vec& x, const F2Vec& y) {
  require_space_dim(space, x, "omega");
  require_space_dim(space, y, "omega");
  F2Vec::Word acc = 0;
  const auto xw = x.words();
  const auto yw = y.words();
  for (std::size_t k = 0; k < xw.size(); ++k) acc ^= xw[k] & swap_pairs(yw[k]);
  return std::popcount(acc) & 1;
}

bool is_symplectic(const SymplecticSpace& space, const F2Mat& m) {
  if (m.rows() != space.dim() || m.cols() != space.dim()) {
    throw DimensionMismatch("is_symplectic: matrix must be 2g x 2g");
  }
  std::vector<F2Vec> images;
  images.reserve(space.dim());
  for (std::size_t k = 0; k < space.dim(); ++k) images.push_back(m.column(k));
  for (std::size_t i = 0; i < space.dim(); ++i) {
    for (std::size_t j = i + 1; j < space.dim(); ++j) {
      const bool expected = (i % 2 == 0) && (j == i + 1);
      if (omega(space, images[i], images[j]) != expected) return false;
    }
  }
  return true;
}

SymplecticElement::SymplecticElement(SymplecticSpace space, F2Mat matrix)
    : space_(space), matrix_(std::move(matrix)) {
  if (!is_symplectic(space_, matrix_)) {
    throw PreconditionFailed("matrix does not preserve the symplectic form");
  }
}

SymplecticElement SymplecticElement::identity(SymplecticSpace space) {
  return {Trusted{}, space, F2Mat::identity(space.dim())};
}

SymplecticElement SymplecticElement::inverse() const {
  return {Trusted{}, space_, mat_inverse(matrix_)};
}

SymplecticElement operator*(const SymplecticElement& lhs, const SymplecticElement& rhs) {
  if (!(lhs.space_ == rhs.space_)) throw DimensionMismatch("symplectic product: genus differs");
  return {SymplecticElement::Trusted{}, lhs.space_, mat_mul(lhs.matrix_, rhs.matrix_)};
}

SymplecticElement transvection(const SymplecticSpace& space, const F2Vec& v) {
  require_space_dim(space, v, "transvection");
  if (v.is_zero()) throw InvalidArgument("transvection: vector must be nonzero");
  std::vector<F2Vec> columns;
  columns.reserve(space.dim());
  for (std::size_t k = 0; k < space.dim(); ++k) {
    F2Vec image = F2Vec::unit(space.dim(), k);
    if (omega(space, image, v)) image ^= v;
    columns.push_back(std::move(image));
  }
  return {SymplecticElement::Trusted{}, space, F2Mat::from_columns(columns)};
}

std::vector<SymplecticElement> all_transvections(const SymplecticSpace& space) {
  if (space.dim() >= 63) throw InvalidArgument("all_transvections: genus too large to enumerate");
  std::vector<SymplecticElement> out;
  const F2Vec::Word count = F2Vec::Word{1} << space.dim();
  out.reserve(count - 1);
  for (F2Vec::Word w = 1; w < count; ++w) out.push_back(transvection(space, F2Vec::from_word(space.dim(), w)));
  return out;
}

std::vector<SymplecticElement> lickorish_transvections(const SymplecticSpace& space) {
  std::vector<SymplecticElement> out;
  for (std::size_t i = 1; i <= space.genus(); ++i) {
    out.push_back(transvection(space, space.a(i)));
    out.push_back(transvection(space, space.b(i)));
  }
  for (std::size_t i = 1; i < space.genus(); ++i) {
    out.push_back(transvection(space, space.a(i) + space.a(i + 1)));
  }
  return out;
}

BigInt StabilizerChain::order() const {
  BigInt n = 1;
  for (auto s : orbit_sizes) n *= s;
  return n;
}

namespace {

struct Element {
  F2Mat m;
  F2Mat inv;
};

// One level of the chain: orbit of base point e_level under the level's
// strong generators, with transversal elements u_x mapping e_level to x.
struct Level {
  F2Vec base;
  std::vector<Element> generators;
  std::vector<F2Vec> orbit;
  std::vector<Element> transversal;
  std::unordered_map<F2Vec, std::size_t> index;

  void rebuild(std::size_t n) {
    orbit.clear();
    transversal.clear();
    index.clear();
    orbit.push_back(base);
    transversal.push_back({F2Mat::identity(n), F2Mat::identity(n)});
    index.emplace(base, 0);
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& s : generators) {
        F2Vec image = mat_vec(s.m, orbit[k]);
        if (index.contains(image)) continue;
        index.emplace(image, orbit.size());
        Element u{mat_mul(s.m, transversal[k].m), mat_mul(transversal[k].inv, s.inv)};
        orbit.push_back(std::move(image));
        transversal.push_back(std::move(u));
      }
    }
  }
};

}  // namespace

StabilizerChain stabilizer_chain(const SymplecticSpace& space,
                                 const std::vector<SymplecticElement>& generators) {
  const std::size_t n = space.dim();
  std::vector<Level> levels(n);
  for (std::size_t l = 0; l < n; ++l) levels[l].base = F2Vec::unit(n, l);

  std::size_t strong = 0;
  for (const auto& g : generators) {
    if (!(g.space() == space)) throw DimensionMismatch("stabilizer_chain: generator genus differs");
    if (g.matrix().is_identity()) continue;
    Element e{g.matrix(), mat_inverse(g.matrix())};
    // A generator belongs to every level whose earlier base points it fixes.
    for (std::size_t l = 0; l < n; ++l) {
      levels[l].generators.push_back(e);
      ++strong;
      if (mat_vec(e.m, levels[l].base) != levels[l].base) break;
    }
  }
  for (auto& level : levels) level.rebuild(n);

  // Strips h through levels [from, n); returns the residue and the level
  // where it left the chain (n if it sifted through).
  auto sift = [&](F2Mat h, std::size_t from) {
    for (std::size_t l = from; l < n; ++l) {
      const F2Vec image = mat_vec(h, levels[l].base);
      auto it = levels[l].index.find(image);
      if (it == levels[l].index.end()) return std::pair{std::move(h), l};
      h = mat_mul(levels[l].transversal[it->second].inv, h);
    }
    return std::pair{std::move(h), n};
  };

  std::size_t i = n;
  while (i-- > 0) {
    bool restarted = false;
    Level& level = levels[i];
    for (std::size_t k = 0; k < level.orbit.size() && !restarted; ++k) {
      for (std::size_t s = 0; s < level.generators.size(); ++s) {
        const Element& gen = level.generators[s];
        const F2Vec image = mat_vec(gen.m, level.orbit[k]);
        const Element& u_img = level.transversal[level.index.at(image)];
        F2Mat schreier = mat_mul(u_img.inv, mat_mul(gen.m, level.transversal[k].m));
        auto [residue, stop] = sift(std::move(schreier), i + 1);
        if (residue.is_identity()) continue;
        // The base is a full basis, so a non-identity residue always stops
        // at some level below n.
        Element r{residue, mat_inverse(residue)};
        for (std::size_t l = i + 1; l <= stop && l < n; ++l) {
          levels[l].generators.push_back(r);
          ++strong;
          levels[l].rebuild(n);
        }
        i = std::min(stop, n - 1) + 1;
        restarted = true;
        break;
      }
    }
  }

  StabilizerChain chain;
  chain.strong_generator_count = strong;
  for (const auto& level : levels) chain.orbit_sizes.push_back(level.orbit.size());
  return chain;
}

BigInt group_order(const SymplecticSpace& space) {
  return stabilizer_chain(space, lickorish_transvections(space)).order();
}

}  // namespace spinext
