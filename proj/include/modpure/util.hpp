#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace modpure {

// Positive divisors of n in ascending order; divisors(0) is empty.
std::vector<long long> divisors(long long n);

long long lcm_ll(long long a, long long b);

std::string join_ints(const std::vector<int>& xs, const std::string& sep);

// Runs fn(0), ..., fn(n-1), fanned out over `jobs` threads. Each call must
// write only to its own output slot, so the outcome is identical for any job
// count.
void parallel_for(long long n, int jobs, const std::function<void(long long)>& fn);

}  // namespace modpure
