#include "brauer/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "brauer/error.hpp"
#include "brauer/parallel.hpp"

namespace brauer {

namespace {

void check_length(int length) {
  if (length < 2 || length > kMaxSites) {
    throw Error(Errc::invalid_argument,
                "diagram length must lie in [2, " + std::to_string(kMaxSites) + "], got " +
                    std::to_string(length));
  }
}

int wrap(int site, int length) { return ((site % length) + length) % length; }

}  // namespace

ChordDiagram ChordDiagram::from_partners(std::span<const int> partners) {
  const int length = static_cast<int>(partners.size());
  check_length(length);
  int defects = 0;
  for (int i = 0; i < length; ++i) {
    const int p = partners[static_cast<std::size_t>(i)];
    if (p == kDefect) {
      ++defects;
      continue;
    }
    if (p < 0 || p >= length) {
      throw Error(Errc::invalid_argument, "partner of site " + std::to_string(i) + " out of range");
    }
    if (p == i) {
      throw Error(Errc::invalid_argument, "site " + std::to_string(i) + " paired with itself");
    }
    if (partners[static_cast<std::size_t>(p)] != i) {
      throw Error(Errc::invalid_argument, "partner array is not an involution at site " +
                                              std::to_string(i));
    }
  }
  if (defects != length % 2) {
    throw Error(Errc::invalid_argument, "expected " + std::to_string(length % 2) +
                                            " defect site(s), found " + std::to_string(defects));
  }
  ChordDiagram d = detail::DiagramAccess::blank(length);
  for (int i = 0; i < length; ++i) {
    d.partner_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(partners[static_cast<std::size_t>(i)]);
  }
  return d;
}

ChordDiagram ChordDiagram::parse(std::string_view text) {
  std::vector<int> partners;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token == ".") {
      partners.push_back(kDefect);
    } else {
      int value = 0;
      const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || end != token.data() + token.size() || value < 1) {
        throw Error(Errc::invalid_argument, "bad diagram token '" + std::string(token) + "'");
      }
      partners.push_back(value - 1);
    }
    pos = comma + 1;
  }
  return from_partners(partners);
}

std::optional<int> ChordDiagram::defect_site() const {
  for (int i = 0; i < length_; ++i) {
    if (partner_[static_cast<std::size_t>(i)] == kDefect) return i;
  }
  return std::nullopt;
}

bool ChordDiagram::adjacent_pair(int site) const {
  return partner(site) == wrap(site + 1, length_);
}

int ChordDiagram::adjacent_pair_count() const {
  int count = 0;
  for (int i = 0; i < length_; ++i) count += adjacent_pair(i) ? 1 : 0;
  return count;
}

std::string ChordDiagram::to_string() const {
  std::string out;
  for (int i = 0; i < length_; ++i) {
    if (i) out += ',';
    const int p = partner_[static_cast<std::size_t>(i)];
    out += p == kDefect ? std::string(".") : std::to_string(p + 1);
  }
  return out;
}

std::strong_ordering operator<=>(const ChordDiagram& a, const ChordDiagram& b) noexcept {
  if (auto c = a.length_ <=> b.length_; c != 0) return c;
  const auto pa = a.partners();
  const auto pb = b.partners();
  return std::lexicographical_compare_three_way(pa.begin(), pa.end(), pb.begin(), pb.end());
}

bool operator==(const ChordDiagram& a, const ChordDiagram& b) noexcept {
  return (a <=> b) == 0;
}

// ---------------------------------------------------------------------------

DiagramBasis::DiagramBasis(int length, std::vector<ChordDiagram> sorted_diagrams)
    : length_(length), diagrams_(std::move(sorted_diagrams)) {
  for (std::size_t i = 1; i < diagrams_.size(); ++i) {
    if (!(diagrams_[i - 1] < diagrams_[i])) {
      throw Error(Errc::invalid_argument, "basis diagrams must be strictly increasing");
    }
  }
}

std::optional<std::size_t> DiagramBasis::find(const ChordDiagram& d) const {
  const auto it = std::lower_bound(diagrams_.begin(), diagrams_.end(), d);
  if (it == diagrams_.end() || *it != d) return std::nullopt;
  return static_cast<std::size_t>(it - diagrams_.begin());
}

std::size_t DiagramBasis::index_of(const ChordDiagram& d) const {
  if (auto i = find(d)) return *i;
  throw Error(Errc::invalid_argument, "diagram " + d.to_string() + " is not in the basis");
}

std::uint64_t basis_size(int length) {
  std::uint64_t n = 1;
  for (int k = length - 1 - length % 2; k > 1; k -= 2) n *= static_cast<std::uint64_t>(k);
  return length % 2 ? n * static_cast<std::uint64_t>(length) : n;
}

namespace {

// Pairs the lowest free site with each later free site in increasing order
// (after first trying it as the defect), which emits diagrams in
// lexicographic order of their partner arrays.
void enumerate_into(std::array<std::int8_t, kMaxSites>& partner, std::array<bool, kMaxSites>& used,
                    int length, bool defect_available, std::vector<ChordDiagram>& out) {
  int first = 0;
  while (first < length && used[static_cast<std::size_t>(first)]) ++first;
  if (first == length) {
    ChordDiagram d = detail::DiagramAccess::blank(length);
    detail::DiagramAccess::raw(d) = partner;
    out.push_back(d);
    return;
  }
  const auto f = static_cast<std::size_t>(first);
  used[f] = true;
  if (defect_available) {
    partner[f] = static_cast<std::int8_t>(kDefect);
    enumerate_into(partner, used, length, false, out);
  }
  for (int j = first + 1; j < length; ++j) {
    const auto s = static_cast<std::size_t>(j);
    if (used[s]) continue;
    used[s] = true;
    partner[f] = static_cast<std::int8_t>(j);
    partner[s] = static_cast<std::int8_t>(first);
    enumerate_into(partner, used, length, defect_available, out);
    used[s] = false;
  }
  used[f] = false;
}

}  // namespace

DiagramBasis enumerate_diagrams(int length) {
  check_length(length);
  if (length > kMaxEnumerationLength) {
    throw Error(Errc::invalid_argument, "enumeration is limited to L <= " +
                                            std::to_string(kMaxEnumerationLength));
  }
  std::vector<ChordDiagram> out;
  out.reserve(basis_size(length));
  std::array<std::int8_t, kMaxSites> partner{};
  std::array<bool, kMaxSites> used{};
  enumerate_into(partner, used, length, length % 2 == 1, out);
  return DiagramBasis(length, std::move(out));
}

ChordDiagram rotate(const ChordDiagram& d, int k) {
  const int length = d.length();
  ChordDiagram out = detail::DiagramAccess::blank(length);
  auto& raw = detail::DiagramAccess::raw(out);
  for (int i = 0; i < length; ++i) {
    const int p = d.partner(i);
    raw[static_cast<std::size_t>(wrap(i + k, length))] =
        static_cast<std::int8_t>(p == kDefect ? kDefect : wrap(p + k, length));
  }
  return out;
}

ChordDiagram reflect(const ChordDiagram& d) {
  const int length = d.length();
  ChordDiagram out = detail::DiagramAccess::blank(length);
  auto& raw = detail::DiagramAccess::raw(out);
  for (int i = 0; i < length; ++i) {
    const int p = d.partner(i);
    raw[static_cast<std::size_t>(length - 1 - i)] =
        static_cast<std::int8_t>(p == kDefect ? kDefect : length - 1 - p);
  }
  return out;
}

std::vector<ChordDiagram> dihedral_images(const ChordDiagram& d) {
  std::vector<ChordDiagram> images;
  images.reserve(2 * static_cast<std::size_t>(d.length()));
  const ChordDiagram mirrored = reflect(d);
  for (int k = 0; k < d.length(); ++k) images.push_back(rotate(d, k));
  for (int k = 0; k < d.length(); ++k) images.push_back(rotate(mirrored, k));
  return images;
}

ChordDiagram canonical_representative(const ChordDiagram& d) {
  ChordDiagram best = d;
  const ChordDiagram mirrored = reflect(d);
  for (int k = 0; k < d.length(); ++k) {
    best = std::min({best, rotate(d, k), rotate(mirrored, k)});
  }
  return best;
}

// ---------------------------------------------------------------------------

OrbitPartition::OrbitPartition(std::vector<SymmetryOrbit> orbits, std::vector<std::size_t> orbit_of)
    : orbits_(std::move(orbits)), orbit_of_(std::move(orbit_of)) {}

OrbitPartition compute_orbits(const DiagramBasis& basis, unsigned threads) {
  std::vector<std::size_t> rep_index(basis.size());
  parallel_for(basis.size(), threads, [&](std::size_t i) {
    rep_index[i] = basis.index_of(canonical_representative(basis[i]));
  });

  // The representative is the smallest member, so scanning the basis in
  // order meets every orbit at its representative first.
  std::vector<SymmetryOrbit> orbits;
  std::vector<std::size_t> orbit_of(basis.size());
  std::vector<std::size_t> slot(basis.size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (rep_index[i] == i) {
      slot[i] = orbits.size();
      orbits.push_back(SymmetryOrbit{basis[i], {}});
    }
    const std::size_t o = slot[rep_index[i]];
    orbit_of[i] = o;
    orbits[o].members.push_back(i);
  }
  return OrbitPartition(std::move(orbits), std::move(orbit_of));
}

// ---------------------------------------------------------------------------

namespace {

std::string image_to_string(const std::vector<int>& image) {
  const bool wide = image.size() >= 10;
  std::string out = "(";
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (wide && i) out += ',';
    out += image[i] == PartialPermutation::kUndefined ? std::string(".") : std::to_string(image[i]);
  }
  return out + ")";
}

}  // namespace

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size() + 1, false);
  for (int v : image_) {
    if (v < 1 || v > rank() || seen[static_cast<std::size_t>(v)]) {
      throw Error(Errc::invalid_argument, "not a permutation: " + image_to_string(image_));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image));
}

Permutation Permutation::longest(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.rbegin(), image.rend(), 1);
  return Permutation(std::move(image));
}

std::string Permutation::to_string() const { return image_to_string(image_); }

PartialPermutation::PartialPermutation(std::vector<int> image) : image_(std::move(image)) {
  if (image_.empty()) throw Error(Errc::invalid_argument, "empty partial permutation");
  const int n = rank();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  int undefined = 0;
  for (int v : image_) {
    if (v == kUndefined) {
      ++undefined;
      continue;
    }
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw Error(Errc::invalid_argument, "not a partial permutation: " + image_to_string(image_));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  if (undefined != 1) {
    throw Error(Errc::invalid_argument, "partial permutation needs exactly one undefined point");
  }
}

int PartialPermutation::undefined_point() const {
  const auto it = std::find(image_.begin(), image_.end(), kUndefined);
  return static_cast<int>(it - image_.begin()) + 1;
}

std::vector<int> PartialPermutation::reverse() const {
  std::vector<int> rev(static_cast<std::size_t>(rank()), 0);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != kUndefined) rev[static_cast<std::size_t>(image_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return rev;
}

std::string PartialPermutation::to_string() const { return image_to_string(image_); }

std::string label_to_string(const DiagramLabel& label) {
  return std::visit([](const auto& pi) { return pi.to_string(); }, label);
}

std::optional<Permutation> permutation_label(const ChordDiagram& d) {
  const int length = d.length();
  if (length % 2 != 0) return std::nullopt;
  const int n = length / 2;
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int p = d.partner(i);
    if (p < n) return std::nullopt;
    image[static_cast<std::size_t>(i)] = p - n + 1;
  }
  return Permutation(std::move(image));
}

std::optional<PartialPermutation> partial_permutation_label(const ChordDiagram& d) {
  const int length = d.length();
  if (length % 2 != 1) return std::nullopt;
  const int n = length / 2;
  for (int j = n + 1; j < length; ++j) {
    if (d.partner(j) == kDefect || d.partner(j) > n) return std::nullopt;
  }
  std::vector<int> image(static_cast<std::size_t>(n) + 1, PartialPermutation::kUndefined);
  for (int i = 0; i <= n; ++i) {
    const int p = d.partner(i);
    if (p != kDefect) image[static_cast<std::size_t>(i)] = p - n;
  }
  return PartialPermutation(std::move(image));
}

std::optional<DiagramLabel> label_of(const ChordDiagram& d) {
  if (d.length() % 2 == 0) {
    if (auto pi = permutation_label(d)) return DiagramLabel(std::move(*pi));
  } else if (auto pi = partial_permutation_label(d)) {
    return DiagramLabel(std::move(*pi));
  }
  return std::nullopt;
}

ChordDiagram diagram_of(const Permutation& pi) {
  const int n = pi.rank();
  std::vector<int> partners(2 * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int j = n + pi(i + 1) - 1;
    partners[static_cast<std::size_t>(i)] = j;
    partners[static_cast<std::size_t>(j)] = i;
  }
  return ChordDiagram::from_partners(partners);
}

ChordDiagram diagram_of(const PartialPermutation& pi) {
  const int n = pi.rank();
  std::vector<int> partners(2 * static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const int v = pi(i + 1);
    if (v == PartialPermutation::kUndefined) {
      partners[static_cast<std::size_t>(i)] = kDefect;
      continue;
    }
    const int j = n + v;
    partners[static_cast<std::size_t>(i)] = j;
    partners[static_cast<std::size_t>(j)] = i;
  }
  return ChordDiagram::from_partners(partners);
}

ChordDiagram diagram_of(const DiagramLabel& label) {
  return std::visit([](const auto& pi) { return diagram_of(pi); }, label);
}

std::vector<DiagramLabel> all_labels(int length) {
  check_length(length);
  const int n = length / 2;
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  std::vector<DiagramLabel> labels;
  do {
    if (length % 2 == 0) {
      labels.emplace_back(Permutation(image));
      continue;
    }
    for (int hole = 0; hole <= n; ++hole) {
      std::vector<int> partial = image;
      partial.insert(partial.begin() + hole, PartialPermutation::kUndefined);
      labels.emplace_back(PartialPermutation(std::move(partial)));
    }
  } while (std::next_permutation(image.begin(), image.end()));
  std::sort(labels.begin(), labels.end());
  return labels;
}

DiagramLabel concatenate(const DiagramLabel& first, const DiagramLabel& second) {
  const bool first_partial = std::holds_alternative<PartialPermutation>(first);
  const bool second_partial = std::holds_alternative<PartialPermutation>(second);
  if (first_partial && second_partial) {
    throw Error(Errc::invalid_argument, "at most one factor may be a partial permutation");
  }
  const int shift = std::visit([](const auto& pi) { return pi.rank(); }, first);
  std::vector<int> image = std::visit([](const auto& pi) { return pi.image(); }, first);
  for (int v : std::visit([](const auto& pi) { return pi.image(); }, second)) {
    image.push_back(v == PartialPermutation::kUndefined ? v : v + shift);
  }
  if (first_partial || second_partial) return PartialPermutation(std::move(image));
  return Permutation(std::move(image));
}

int label_length(const DiagramLabel& label) {
  if (const auto* pi = std::get_if<Permutation>(&label)) return 2 * pi->rank();
  return 2 * std::get<PartialPermutation>(label).rank() + 1;
}

}  // namespace brauer
