#include "edist/transform.hpp"

namespace edist {

// Commonly used instantiations, compiled once.
template std::vector<std::int64_t> distance_transform<std::int64_t>(
    const std::vector<std::int64_t>&, std::int64_t, std::int64_t);
template std::vector<double> distance_transform<double>(
    const std::vector<double>&, std::int64_t, double);

}  // namespace edist
