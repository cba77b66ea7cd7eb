#pragma once

#include "asmpoly/matrix.hpp"
#include "asmpoly/membership.hpp"
#include "asmpoly/partial_sums.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace asmpoly {

/// A corner of a circuit: matrix position (1-based) and its label.
struct CircuitCorner {
  std::size_t row;
  std::size_t col;
  int sign; // +1 or -1
  friend bool operator==(const CircuitCorner &, const CircuitCorner &) = default;
};

/// A prefix sum crossed by a circuit segment. `shift` is the sign of its
/// change when the (+) corners are raised and the (-) corners lowered; it
/// equals the label of the segment's left (row) or upper (column) corner.
struct TraversedSum {
  enum class Axis { Row, Column };
  Axis axis;
  std::size_t i;
  std::size_t j;
  int shift;
  friend bool operator==(const TraversedSum &, const TraversedSum &) = default;
};

/// A closed rectilinear walk through matrix entries whose every crossed
/// prefix sum is inner. Consecutive corners share a row or a column,
/// alternately, and carry opposite labels.
struct Circuit {
  std::vector<CircuitCorner> corners;
  std::vector<TraversedSum> traversed;
};

/// Invariant breach inside the decomposition machinery. Never expected for
/// inputs that pass check_membership.
class DecompositionLogicError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class NotAMember : public std::invalid_argument {
public:
  explicit NotAMember(ConstraintViolation v)
      : std::invalid_argument("matrix is not in the ASM polytope: " +
                              v.describe()),
        violation_(v) {}
  [[nodiscard]] const ConstraintViolation &violation() const { return violation_; }

private:
  ConstraintViolation violation_;
};

/// Walks from the first inner prefix sum (row-major; row sums before column
/// sums at the same position), always leaving an entry by the first inner
/// sum in the order right, down, left, up that does not reverse the last
/// step. Closes at the first revisited entry. Returns nullopt iff the
/// tableau has no inner sum.
std::optional<Circuit> find_circuit(const PartialSumTableau &t);

struct CircuitSplit {
  Rational k_plus;  ///< raise (+) corners, lower (-) corners by this much
  RationalMatrix raised;
  Rational k_minus; ///< the same with labels exchanged
  RationalMatrix lowered;

  /// x = weight_raised * raised + weight_lowered * lowered.
  [[nodiscard]] Rational weight_raised() const { return k_minus / (k_plus + k_minus); }
  [[nodiscard]] Rational weight_lowered() const { return k_plus / (k_plus + k_minus); }
};

CircuitSplit split_on_circuit(const RationalMatrix &x, const Circuit &c);

struct ConvexTerm {
  Rational coefficient;
  AsmMatrix matrix;
};

/// Positive coefficients summing to one, terms sorted by matrix.
class ConvexCombination {
public:
  ConvexCombination() = default;
  /// Throws std::invalid_argument unless coefficients are positive, sum to
  /// one, matrices share an order and are pairwise distinct. Sorts terms.
  explicit ConvexCombination(std::vector<ConvexTerm> terms);

  [[nodiscard]] const std::vector<ConvexTerm> &terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] RationalMatrix recombine() const;

private:
  std::vector<ConvexTerm> terms_;
};

struct DecompositionStats {
  std::size_t splits = 0;
  /// Longest chain of splits from the input to any leaf.
  std::size_t max_depth = 0;
};

/// Repeated circuit splitting down to ASMs. Identical intermediate matrices
/// reached through different branches are merged before being split again.
/// Throws NotAMember if x fails check_membership.
ConvexCombination decompose(const RationalMatrix &x,
                            DecompositionStats *stats = nullptr);

} // namespace asmpoly
