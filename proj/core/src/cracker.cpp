#include "fibcipher/cracker.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fibcipher {

std::string_view to_string(CrackStatus status) noexcept {
    switch (status) {
        case CrackStatus::Found: return "found";
        case CrackStatus::FoundWithIssues: return "found-with-issues";
        case CrackStatus::NotFound: return "not-found";
    }
    return "unknown";
}

namespace {

constexpr std::uint64_t kMaxCode = 9'999'999'999ULL;

struct UnitHit {
    std::uint64_t candidate = 0;
    DecryptOutcome outcome;
};

}  // namespace

CrackOutcome crack_range(const CrackRequest& request, const CrackOptions& options) {
    const std::uint64_t first = request.start.value();
    if (request.count == 0) {
        throw DomainError("crack range must contain at least one candidate");
    }
    if (request.count > kMaxCode + 1 || first > kMaxCode - (request.count - 1)) {
        throw DomainError("crack range ends past 9999999999");
    }

    const std::uint64_t unit_size = std::max<std::uint64_t>(1, options.unit_size);
    const std::uint64_t total_units = (request.count + unit_size - 1) / unit_size;

    unsigned threads = options.threads != 0 ? options.threads
                                            : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(
        std::min<std::uint64_t>(threads, total_units));

    // Per-unit results; units are disjoint ascending subranges, and each
    // stores its own lowest hit, so the first non-empty slot after the
    // join is the global lowest regardless of which thread ran what.
    std::vector<std::optional<UnitHit>> unit_hits(total_units);
    std::atomic<std::uint64_t> next_unit{0};
    std::atomic<std::uint64_t> best{UINT64_MAX};
    std::mutex progress_mutex;
    std::uint64_t candidates_done = 0;
    std::exception_ptr failure;

    const auto worker = [&] {
        while (true) {
            const std::uint64_t unit = next_unit.fetch_add(1);
            if (unit >= total_units) break;
            {
                std::scoped_lock lock(progress_mutex);
                if (failure) break;
            }

            const std::uint64_t unit_first = first + unit * unit_size;
            const std::uint64_t unit_count =
                std::min(unit_size, request.count - unit * unit_size);

            // A unit that starts above an already-found hit cannot hold a
            // lower one.
            if (unit_first <= best.load(std::memory_order_relaxed)) {
                try {
                    for (std::uint64_t c = unit_first; c < unit_first + unit_count; ++c) {
                        DecryptOutcome outcome =
                            decrypt(request.ciphertext, SecretCode::from_value(c));
                        if (outcome.status != DecryptStatus::WrongCode) {
                            unit_hits[unit] = UnitHit{c, std::move(outcome)};
                            std::uint64_t prev = best.load();
                            while (c < prev && !best.compare_exchange_weak(prev, c)) {
                            }
                            break;
                        }
                    }
                } catch (...) {
                    std::scoped_lock lock(progress_mutex);
                    if (!failure) failure = std::current_exception();
                    break;
                }
            }

            if (options.progress) {
                std::scoped_lock lock(progress_mutex);
                candidates_done += unit_count;
                options.progress(candidates_done, request.count);
            }
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    CrackOutcome result;
    for (auto& hit : unit_hits) {
        if (!hit) continue;
        result.status = hit->outcome.status == DecryptStatus::Ok
                            ? CrackStatus::Found
                            : CrackStatus::FoundWithIssues;
        result.code = SecretCode::from_value(hit->candidate);
        result.plaintext = std::move(hit->outcome.plaintext);
        result.tried = hit->candidate - first + 1;
        return result;
    }
    result.status = CrackStatus::NotFound;
    result.tried = request.count;
    return result;
}

}  // namespace fibcipher
