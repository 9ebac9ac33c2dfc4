#pragma once

#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

namespace synthline {

// Runs produce(i) for i = first..(bounded) on up to `workers` threads and
// feeds results to consume(i, result) strictly in index order on the calling
// thread. consume returns false to stop: in-flight results past the stop
// point are discarded, which keeps output independent of scheduling.
// Exceptions from produce are rethrown on the calling thread at the failing
// index (lowest index wins when several fail).
class OrderedParallelRunner {
 public:
  using Producer = std::function<std::string(std::uint64_t)>;
  using Consumer = std::function<bool(std::uint64_t, std::string&&)>;

  OrderedParallelRunner(int workers, std::uint64_t first, std::uint64_t limit)
      : workers_(workers < 1 ? 1 : workers), next_(first), limit_(limit) {}

  void run(const Producer& produce, const Consumer& consume);

 private:
  int workers_;
  std::uint64_t next_;
  std::uint64_t limit_;
};

}  // namespace synthline
