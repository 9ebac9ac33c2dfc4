#include "synthline/concurrency.hpp"

namespace synthline {

void OrderedParallelRunner::run(const Producer& produce, const Consumer& consume) {
  struct Shared {
    std::mutex mu;
    std::condition_variable cv;
    std::uint64_t dispatch_next;
    std::uint64_t limit;
    bool stopped = false;
    std::map<std::uint64_t, std::string> ready;
    std::map<std::uint64_t, std::exception_ptr> failed;
  } shared;

  shared.dispatch_next = next_;
  shared.limit = limit_;

  auto worker = [&shared, &produce]() {
    for (;;) {
      std::uint64_t index;
      {
        std::lock_guard<std::mutex> lock(shared.mu);
        if (shared.stopped || shared.dispatch_next >= shared.limit) {
          return;
        }
        index = shared.dispatch_next++;
      }
      std::string result;
      std::exception_ptr error;
      try {
        result = produce(index);
      } catch (...) {
        error = std::current_exception();
      }
      {
        std::lock_guard<std::mutex> lock(shared.mu);
        if (error) {
          shared.failed[index] = error;
        } else {
          shared.ready[index] = std::move(result);
        }
      }
      shared.cv.notify_all();
    }
  };

  std::vector<std::thread> threads;
  const std::uint64_t span = limit_ - next_;
  const int n =
      span < static_cast<std::uint64_t>(workers_) ? static_cast<int>(span) : workers_;
  threads.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    threads.emplace_back(worker);
  }

  auto shutdown = [&]() {
    {
      std::lock_guard<std::mutex> lock(shared.mu);
      shared.stopped = true;
    }
    shared.cv.notify_all();
    for (auto& t : threads) {
      if (t.joinable()) {
        t.join();
      }
    }
  };

  std::exception_ptr pending;
  try {
    std::uint64_t consume_next = next_;
    std::unique_lock<std::mutex> lock(shared.mu);
    while (consume_next < limit_) {
      shared.cv.wait(lock, [&] {
        return shared.ready.count(consume_next) || shared.failed.count(consume_next);
      });
      if (auto it = shared.failed.find(consume_next); it != shared.failed.end()) {
        pending = it->second;
        break;
      }
      std::string value = std::move(shared.ready[consume_next]);
      shared.ready.erase(consume_next);
      lock.unlock();
      const bool keep_going = consume(consume_next, std::move(value));
      lock.lock();
      ++consume_next;
      if (!keep_going) {
        break;
      }
    }
  } catch (...) {
    shutdown();
    throw;
  }
  shutdown();
  if (pending) {
    std::rethrow_exception(pending);
  }
}

}  // namespace synthline
