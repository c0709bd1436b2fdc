#include "idealorder/ideals/profile.hpp"

#include "idealorder/error.hpp"

namespace idealorder::ideals {

unsigned SplittingProfile::degree() const {
  unsigned n = 0;
  for (const auto& s : primes) n += s.e * s.f;
  return n;
}

FixedProfiles::FixedProfiles(std::vector<SplittingProfile> profiles, unsigned inert_degree)
    : inert_degree_(inert_degree) {
  for (auto& prof : profiles) {
    if (prof.primes.empty()) throw InvalidInput("empty splitting profile for p=" + prof.p.get_str());
    for (const auto& s : prof.primes)
      if (s.e == 0 || s.f == 0) throw InvalidInput("e and f must be positive");
    if (inert_degree_ != 0 && prof.degree() != inert_degree_)
      throw InvalidInput("profile for p=" + prof.p.get_str() + " has sum(e*f) != " + std::to_string(inert_degree_));
    Integer p = prof.p;
    profiles_.insert_or_assign(p, std::move(prof));
  }
}

SplittingProfile FixedProfiles::profile(const Integer& p) const {
  if (auto it = profiles_.find(p); it != profiles_.end()) return it->second;
  if (inert_degree_ == 0) throw FixtureRequired("no splitting profile for p=" + p.get_str());
  return SplittingProfile{p, {PrimeShape{1, inert_degree_}}};
}

}  // namespace idealorder::ideals
