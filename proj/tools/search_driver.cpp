#include "search_driver.hpp"

#include "ipset/errors.hpp"
#include "ipset/io.hpp"

#include <atomic>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <vector>

namespace ipset::cli {

namespace {

struct Batch {
    std::vector<FoundSet> results;
    std::vector<OuterKey> keys;
    std::size_t skipped = 0;
};

} // namespace

SearchSummary run_search(const SearchRun& run, std::ostream& out)
{
    run.config.validate();
    std::set<OuterKey> done;
    if (run.resume && run.checkpoint)
        done = read_checkpoint(*run.checkpoint);
    std::ofstream ckpt;
    if (run.checkpoint) {
        ckpt.open(*run.checkpoint, std::ios::app);
        if (!ckpt)
            throw ParseError("cannot open checkpoint " + run.checkpoint->string());
    }

    SearchSummary summary;
    std::atomic<std::int64_t> next{run.config.d_min};
    std::mutex mu;
    std::map<std::int64_t, Batch> ready;
    std::int64_t emit_next = run.config.d_min;
    std::exception_ptr failure;

    auto flush_ready = [&] {
        for (auto it = ready.find(emit_next); it != ready.end(); it = ready.find(emit_next)) {
            for (const auto& f : it->second.results) {
                if (run.format == RecordFormat::Json)
                    out << format_record(f) << '\n';
                else
                    out << format_matrix(f.matrix) << '\n';
            }
            out.flush();
            for (const auto& key : it->second.keys)
                ckpt << format_checkpoint_line(key);
            ckpt.flush();
            summary.results += it->second.results.size();
            summary.keys += it->second.keys.size();
            summary.skipped += it->second.skipped;
            ready.erase(it);
            ++emit_next;
        }
    };

    auto worker = [&] {
        try {
            for (std::int64_t d = next++; d <= run.config.d_max; d = next++) {
                {
                    std::lock_guard lock(mu);
                    if (failure)
                        return;
                }
                SearchConfig one = run.config;
                one.d_min = one.d_max = d;
                Batch batch;
                SearchObserver obs;
                obs.on_result = [&](const FoundSet& f) { batch.results.push_back(f); };
                obs.on_key_done = [&](const OuterKey& k) { batch.keys.push_back(k); };
                obs.skip_key = [&](const OuterKey& k) {
                    const bool skip = done.count(k) == 1;
                    batch.skipped += skip ? 1 : 0;
                    return skip;
                };
                search(one, obs);
                std::lock_guard lock(mu);
                ready.emplace(d, std::move(batch));
                flush_ready();
            }
        } catch (...) {
            std::lock_guard lock(mu);
            if (!failure)
                failure = std::current_exception();
        }
    };

    const std::size_t jobs = std::max<std::size_t>(1, run.jobs);
    std::vector<std::thread> pool;
    for (std::size_t i = 1; i < jobs; ++i)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return summary;
}

} // namespace ipset::cli
