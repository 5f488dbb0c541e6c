#pragma once

/**
 * @file scan.hpp
 * @brief Parallel parameter-grid scans with append-only checkpointing.
 *
 * Grid cells are evaluated by independent workers (the underlying library
 * calls are pure), and results are reduced in canonical grid order, so the
 * report is byte-identical regardless of thread count or schedule.
 *
 * The checkpoint file holds one line per completed cell,
 *
 *     cell-key<TAB>status<TAB>payload-hash
 *
 * appended and flushed as cells finish. A restarted scan skips cells already
 * checkpointed as passing and takes their status/hash from the file; cells
 * checkpointed as failing are recomputed (deterministically) so the failure
 * witness can be reported again.
 */

#include <atomic>
#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lgenus/charclass.hpp"
#include "lgenus/errors.hpp"
#include "lgenus/hodge.hpp"
#include "lgenus/io.hpp"

namespace lgenus {

enum class ScanMode { pn_positivity, ci_alternating, oracle_agreement };

inline std::string to_string(ScanMode m) {
    switch (m) {
        case ScanMode::pn_positivity: return "conjecture27";
        case ScanMode::ci_alternating: return "conjecture211";
        case ScanMode::oracle_agreement: return "oracle-agreement";
    }
    return "?";
}

inline ScanMode scan_mode_from_string(const std::string& s) {
    if (s == "conjecture27") return ScanMode::pn_positivity;
    if (s == "conjecture211") return ScanMode::ci_alternating;
    if (s == "oracle-agreement") return ScanMode::oracle_agreement;
    throw invalid_input("unknown scan mode: " + s);
}

/// Inclusive ranges over m and over each degree slot. The degree slots are
/// named d, e in cell keys.
struct ScanGrid {
    ScanMode mode = ScanMode::pn_positivity;
    std::pair<unsigned, unsigned> m_range{1, 1};
    std::vector<std::pair<long, long>> degree_ranges;

    void validate() const {
        if (m_range.second < m_range.first) throw invalid_input("empty m range");
        for (const auto& [lo, hi] : degree_ranges) {
            if (hi < lo) throw invalid_input("empty degree range");
            if (lo < 1) throw invalid_input("degrees must be >= 1");
        }
        switch (mode) {
            case ScanMode::pn_positivity:
                if (!degree_ranges.empty())
                    throw invalid_input("conjecture27 scans take no degree ranges");
                break;
            case ScanMode::ci_alternating:
                if (degree_ranges.empty() || degree_ranges.size() > 2)
                    throw invalid_input("conjecture211 scans take one or two degree ranges");
                break;
            case ScanMode::oracle_agreement:
                if (degree_ranges.size() != 1)
                    throw invalid_input("oracle-agreement scans take exactly one degree range");
                if (m_range.first < 1)
                    throw invalid_input("oracle-agreement scans need m >= 1");
                break;
        }
    }
};

struct ScanCell {
    unsigned m = 0;
    std::vector<long> degrees;

    std::string key() const {
        static const char* names[] = {"d", "e"};
        std::ostringstream os;
        os << "m=" << m;
        for (std::size_t i = 0; i < degrees.size(); ++i)
            os << "," << names[i] << "=" << degrees[i];
        return os.str();
    }
};

/// Canonical cell order: m ascending, then degree tuples lexicographically.
inline std::vector<ScanCell> enumerate_cells(const ScanGrid& grid) {
    std::vector<ScanCell> cells;
    for (unsigned m = grid.m_range.first; m <= grid.m_range.second; ++m) {
        std::vector<long> degs(grid.degree_ranges.size());
        for (std::size_t i = 0; i < degs.size(); ++i) degs[i] = grid.degree_ranges[i].first;
        while (true) {
            cells.push_back({m, degs});
            if (degs.empty()) break;
            std::size_t i = degs.size();
            while (i > 0) {
                --i;
                if (degs[i] < grid.degree_ranges[i].second) {
                    ++degs[i];
                    for (std::size_t k = i + 1; k < degs.size(); ++k)
                        degs[k] = grid.degree_ranges[k].first;
                    break;
                }
                if (i == 0) goto next_m;
            }
        }
    next_m:;
    }
    return cells;
}

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hash_hex(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

struct ScanCellResult {
    std::string key;
    bool pass = true;
    std::string hash;   // fnv1a64 of the canonical payload, hex
    Json witness;       // null when passing
};

struct ScanOutcome {
    std::vector<ScanCellResult> cells; // canonical grid order
    bool all_pass = true;
};

namespace detail {

struct CellEvaluation {
    bool pass;
    std::string payload; // canonical compact JSON
    Json witness;
};

inline CellEvaluation evaluate_cell(ScanMode mode, const ScanCell& cell) {
    CellEvaluation ev;
    switch (mode) {
        case ScanMode::pn_positivity: {
            PositivityReport rep = check_pn_positivity(cell.m);
            Json payload = to_json(rep);
            ev.pass = rep.pass;
            ev.payload = payload.dump();
            if (!rep.pass) {
                ev.witness["cell"] = cell.key();
                ev.witness["j"] = *rep.first_failing_j;
                ev.witness["coefficient"] = rep.failing_coefficient->to_string();
            }
            break;
        }
        case ScanMode::ci_alternating: {
            CompleteIntersectionSpec spec{cell.m, cell.degrees};
            PositivityReport rep = check_ci_alternating_positivity(spec);
            Json payload = to_json(rep);
            ev.pass = rep.pass;
            ev.payload = payload.dump();
            if (!rep.pass) {
                ev.witness["cell"] = cell.key();
                ev.witness["j"] = *rep.first_failing_j;
                ev.witness["coefficient"] = rep.failing_coefficient->to_string();
                ev.witness["side_condition_holds"] = rep.side_condition_holds;
            }
            break;
        }
        case ScanMode::oracle_agreement: {
            CompleteIntersectionSpec spec{cell.m, cell.degrees};
            Rational a = signature_ci(spec);
            BigInt b = signature_hodge_index(cell.m, cell.degrees[0]);
            BigInt c = signature_genfun(cell.m, cell.degrees[0]);
            bool agree = a.is_integer() && a.num() == b && b == c;
            Json payload;
            payload["m"] = cell.m;
            payload["d"] = cell.degrees[0];
            payload["lclass"] = a.to_string();
            payload["hodge"] = b.get_str();
            payload["genfun"] = c.get_str();
            payload["pass"] = agree;
            ev.pass = agree;
            ev.payload = payload.dump();
            if (!agree) {
                ev.witness["cell"] = cell.key();
                ev.witness["lclass"] = a.to_string();
                ev.witness["hodge"] = b.get_str();
                ev.witness["genfun"] = c.get_str();
            }
            break;
        }
    }
    return ev;
}

struct CheckpointEntry {
    bool pass;
    std::string hash;
};

inline std::map<std::string, CheckpointEntry>
load_checkpoint(const std::string& path, const std::vector<ScanCell>& cells) {
    std::map<std::string, CheckpointEntry> out;
    std::ifstream in(path);
    if (!in) return out; // nothing checkpointed yet
    std::map<std::string, bool> known;
    for (const ScanCell& c : cells) known[c.key()] = true;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::size_t t1 = line.find('\t');
        std::size_t t2 = (t1 == std::string::npos) ? std::string::npos : line.find('\t', t1 + 1);
        if (t1 == std::string::npos || t2 == std::string::npos)
            throw invalid_input("corrupt checkpoint at line " + std::to_string(lineno) +
                                ": expected cell-key<TAB>status<TAB>payload-hash");
        std::string key = line.substr(0, t1);
        std::string status = line.substr(t1 + 1, t2 - t1 - 1);
        std::string hash = line.substr(t2 + 1);
        if (status != "pass" && status != "fail")
            throw invalid_input("corrupt checkpoint at line " + std::to_string(lineno) +
                                ": bad status '" + status + "'");
        if (hash.size() != 16 || hash.find_first_not_of("0123456789abcdef") != std::string::npos)
            throw invalid_input("corrupt checkpoint at line " + std::to_string(lineno) +
                                ": bad payload hash");
        if (!known.count(key))
            throw invalid_input("corrupt checkpoint at line " + std::to_string(lineno) +
                                ": unknown cell '" + key + "'");
        out[key] = {status == "pass", hash};
    }
    return out;
}

} // namespace detail

/// Runs the scan. threads = 0 means hardware concurrency. checkpoint_path
/// empty disables checkpointing. progress (when non-null) receives one line
/// per finished cell.
inline ScanOutcome run_scan(const ScanGrid& grid, unsigned threads,
                            const std::string& checkpoint_path = "",
                            std::ostream* progress = nullptr) {
    grid.validate();
    std::vector<ScanCell> cells = enumerate_cells(grid);

    std::map<std::string, detail::CheckpointEntry> done;
    if (!checkpoint_path.empty()) done = detail::load_checkpoint(checkpoint_path, cells);

    // Cells still needing evaluation: everything not checkpointed as passing.
    // Failing cells are re-evaluated so the witness can be reproduced.
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        auto it = done.find(cells[i].key());
        if (it == done.end() || !it->second.pass) pending.push_back(i);
    }

    std::vector<std::optional<detail::CellEvaluation>> evals(cells.size());
    std::ofstream ckpt;
    std::mutex io_mutex;
    if (!checkpoint_path.empty()) {
        ckpt.open(checkpoint_path, std::ios::app);
        if (!ckpt) throw invalid_input("cannot open checkpoint file: " + checkpoint_path);
    }

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(pending.size(), 1));

    std::atomic<std::size_t> next{0};
    std::exception_ptr worker_error;
    std::mutex error_mutex;

    auto worker = [&]() {
        while (true) {
            std::size_t slot = next.fetch_add(1);
            if (slot >= pending.size()) return;
            std::size_t idx = pending[slot];
            try {
                detail::CellEvaluation ev = detail::evaluate_cell(grid.mode, cells[idx]);
                std::string hash = hash_hex(fnv1a64(ev.payload));
                {
                    std::lock_guard<std::mutex> lock(io_mutex);
                    if (ckpt.is_open()) {
                        ckpt << cells[idx].key() << '\t' << (ev.pass ? "pass" : "fail") << '\t'
                             << hash << '\n';
                        ckpt.flush();
                    }
                    if (progress)
                        *progress << cells[idx].key() << " " << (ev.pass ? "pass" : "FAIL")
                                  << "\n";
                    evals[idx] = std::move(ev);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!worker_error) worker_error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (worker_error) std::rethrow_exception(worker_error);

    // Reduce in canonical grid order.
    ScanOutcome outcome;
    outcome.cells.reserve(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        ScanCellResult r;
        r.key = cells[i].key();
        if (evals[i]) {
            r.pass = evals[i]->pass;
            r.hash = hash_hex(fnv1a64(evals[i]->payload));
            r.witness = evals[i]->witness;
            // A checkpointed cell recomputed here must reproduce its hash.
            auto it = done.find(r.key);
            if (it != done.end() && it->second.hash != r.hash)
                throw invalid_input("checkpoint hash mismatch for cell '" + r.key +
                                    "': file says " + it->second.hash + ", computed " + r.hash);
        } else {
            const auto& entry = done.at(r.key);
            r.pass = entry.pass;
            r.hash = entry.hash;
        }
        if (!r.pass) outcome.all_pass = false;
        outcome.cells.push_back(std::move(r));
    }
    return outcome;
}

inline Json to_json(const ScanOutcome& outcome) {
    Json rows = Json::array();
    for (const auto& c : outcome.cells) {
        Json r;
        r["cell"] = c.key;
        r["status"] = c.pass ? "pass" : "fail";
        r["hash"] = c.hash;
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace lgenus
