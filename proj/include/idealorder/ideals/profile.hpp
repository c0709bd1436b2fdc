#pragma once

#include <map>
#include <utility>
#include <vector>

#include "idealorder/arith/integer.hpp"

namespace idealorder::ideals {

using arith::Integer;

/// Ramification index and residue degree of one prime above p.
struct PrimeShape {
  unsigned e = 1;
  unsigned f = 1;

  friend bool operator==(const PrimeShape&, const PrimeShape&) = default;
};

/// The primes above one rational prime p, in canonical prime order.
struct SplittingProfile {
  Integer p;
  std::vector<PrimeShape> primes;

  unsigned degree() const;
  friend bool operator==(const SplittingProfile&, const SplittingProfile&) = default;
};

/// Supplies splitting profiles; implementations must be safe for concurrent
/// calls.
class ProfileSource {
 public:
  virtual ~ProfileSource() = default;
  /// Throws FixtureRequired when p cannot be handled.
  virtual SplittingProfile profile(const Integer& p) const = 0;
};

/// Profiles given up front. Primes not listed are inert when a field degree
/// is set, and missing otherwise.
class FixedProfiles : public ProfileSource {
 public:
  explicit FixedProfiles(std::vector<SplittingProfile> profiles, unsigned inert_degree = 0);
  SplittingProfile profile(const Integer& p) const override;

 private:
  std::map<Integer, SplittingProfile> profiles_;
  unsigned inert_degree_;
};

}  // namespace idealorder::ideals
