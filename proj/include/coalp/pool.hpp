#pragma once

#include <atomic>
#include <condition_variable>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace coalp {

/// Fixed pool of worker threads running indexed batches. Results are
/// written by index, so a batch of pure tasks is deterministic regardless
/// of worker count.
class WorkerPool {
public:
    explicit WorkerPool(int workers);
    ~WorkerPool();

    WorkerPool(const WorkerPool&) = delete;
    WorkerPool& operator=(const WorkerPool&) = delete;

    int workers() const { return static_cast<int>(threads_.size()) + 1; }

    /// Runs body(i) for every i in [0, count); blocks until all complete.
    /// With a single worker everything runs inline on the caller.
    void run(int count, const std::function<void(int)>& body);

private:
    void workerLoop();

    std::vector<std::thread> threads_;
    std::mutex mu_;
    std::condition_variable cvWork_;
    std::condition_variable cvDone_;
    const std::function<void(int)>* body_ = nullptr;
    int count_ = 0;
    std::atomic<int> nextIndex_{0};
    std::atomic<int> remaining_{0};
    uint64_t batchId_ = 0;
    bool stop_ = false;
};

}  // namespace coalp
