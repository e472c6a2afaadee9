#pragma once

#include <algorithm>
#include <vector>

#include "tlab/integers.hpp"

namespace tlab {

/// A place of Q: the archimedean place or a finite prime.
struct Place {
    bool archimedean = true;
    Int prime = 0;

    static Place arch() { return {}; }
    static Place finite(const Int& p) { return {false, p}; }
};

/// Finite set of places, always containing the archimedean place.
class PlaceSet {
  public:
    PlaceSet() = default;
    explicit PlaceSet(std::vector<Int> primes) : primes_(std::move(primes)) {
        std::sort(primes_.begin(), primes_.end());
        primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
    }

    const std::vector<Int>& finite_primes() const { return primes_; }
    bool contains(const Int& p) const {
        return std::binary_search(primes_.begin(), primes_.end(), p);
    }
    void add(const Int& p) {
        if (!contains(p)) {
            primes_.push_back(p);
            std::sort(primes_.begin(), primes_.end());
        }
    }

  private:
    std::vector<Int> primes_;
};

}  // namespace tlab
