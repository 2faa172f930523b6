#include "coalp/pool.hpp"

namespace coalp {

WorkerPool::WorkerPool(int workers) {
    for (int i = 1; i < workers; ++i)
        threads_.emplace_back([this] { workerLoop(); });
}

WorkerPool::~WorkerPool() {
    {
        std::lock_guard<std::mutex> lock(mu_);
        stop_ = true;
    }
    cvWork_.notify_all();
    for (auto& t : threads_) t.join();
}

void WorkerPool::run(int count, const std::function<void(int)>& body) {
    if (count <= 0) return;
    if (threads_.empty() || count == 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    uint64_t batch;
    {
        std::lock_guard<std::mutex> lock(mu_);
        body_ = &body;
        count_ = count;
        nextIndex_.store(0);
        remaining_.store(count);
        batch = ++batchId_;
    }
    cvWork_.notify_all();
    // The caller participates too. Index claims are mutex-guarded; tasks
    // here are coarse (tree builds, state expansions) so this is cheap.
    while (true) {
        int i;
        {
            std::lock_guard<std::mutex> lock(mu_);
            i = nextIndex_.load();
            if (i >= count) break;
            nextIndex_.store(i + 1);
        }
        body(i);
        remaining_.fetch_sub(1);
    }
    {
        std::unique_lock<std::mutex> lock(mu_);
        cvDone_.wait(lock, [this] { return remaining_.load() == 0; });
        body_ = nullptr;
        (void)batch;
    }
}

void WorkerPool::workerLoop() {
    uint64_t seen = 0;
    while (true) {
        while (true) {
            const std::function<void(int)>* body = nullptr;
            int i = -1;
            {
                std::unique_lock<std::mutex> lock(mu_);
                cvWork_.wait(lock, [&] { return stop_ || (body_ && batchId_ != seen); });
                if (stop_) return;
                i = nextIndex_.load();
                if (i >= count_) {
                    // Batch drained; wait for the next one.
                    seen = batchId_;
                    break;
                }
                nextIndex_.store(i + 1);
                body = body_;
            }
            (*body)(i);
            if (remaining_.fetch_sub(1) == 1) {
                std::lock_guard<std::mutex> lock(mu_);
                cvDone_.notify_all();
            }
        }
    }
}

}  // namespace coalp
