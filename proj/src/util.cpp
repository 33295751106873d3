#include "modpure/util.hpp"

#include <atomic>
#include <numeric>
#include <sstream>
#include <thread>

namespace modpure {

std::vector<long long> divisors(long long n) {
  std::vector<long long> out;
  if (n <= 0) return out;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long lcm_ll(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

std::string join_ints(const std::vector<int>& xs, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << sep;
    os << xs[i];
  }
  return os.str();
}

void parallel_for(long long n, int jobs, const std::function<void(long long)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (long long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<long long> next{0};
  auto worker = [&] {
    for (;;) {
      long long i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  int count = static_cast<int>(std::min<long long>(jobs, n));
  pool.reserve(static_cast<std::size_t>(count));
  for (int t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace modpure
