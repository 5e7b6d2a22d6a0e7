#include "recolor/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace recolor {

namespace fs = std::filesystem;

namespace {

EngineKind parse_engine(const std::string& s) {
    if (s == "tabucol") return EngineKind::Tabucol;
    if (s == "partialcol") return EngineKind::Partialcol;
    throw std::invalid_argument("unknown algorithm '" + s + "'");
}

TenureScheme parse_tenure(const std::string& s) {
    if (s == "dyn") return DynTenure{};
    if (s == "foo") return FooTenure{};
    throw std::invalid_argument("unknown tenure scheme '" + s + "'");
}

InitKind parse_init(const std::string& s) {
    if (s == "recycle-star") return InitKind::RecycleStar;
    if (s == "recycle-t") return InitKind::RecycleT;
    if (s == "greedy") return InitKind::Greedy;
    if (s == "random") return InitKind::Random;
    throw std::invalid_argument("unknown init generator '" + s + "'");
}

RecolorRule parse_recolor(const std::string& s) {
    if (s == "random") return RecolorRule::Random;
    if (s == "least") return RecolorRule::LeastSelection;
    throw std::invalid_argument("unknown recolor rule '" + s + "'");
}

double mean_of(const std::vector<double>& xs) {
    if (xs.empty()) {
        return 0.0;
    }
    double sum = 0.0;
    for (double x : xs) {
        sum += x;
    }
    return sum / static_cast<double>(xs.size());
}

double sample_stddev(const std::vector<double>& xs) {
    if (xs.size() < 2) {
        return 0.0;
    }
    const double mean = mean_of(xs);
    double sq = 0.0;
    for (double x : xs) {
        sq += (x - mean) * (x - mean);
    }
    return std::sqrt(sq / static_cast<double>(xs.size() - 1));
}

int resolve_jobs(int requested) {
    if (const char* env = std::getenv("RECOLOR_JOBS")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) {
                return v;
            }
        } catch (const std::exception&) {
        }
        throw std::invalid_argument(std::string("RECOLOR_JOBS must be a positive integer, got '") +
                                    env + "'");
    }
    return std::max(1, requested);
}

}  // namespace

CampaignConfig campaign_from_json(const nlohmann::json& j) {
    static const std::set<std::string> known = {"instances", "algorithm", "tenure", "init",
                                                "t",         "recolor",   "trials", "time_limit",
                                                "iter_cap",  "seed",      "output_dir", "jobs"};
    for (const auto& [key, value] : j.items()) {
        if (!known.contains(key)) {
            throw std::invalid_argument("unknown campaign key '" + key + "'");
        }
    }
    CampaignConfig cfg;
    cfg.instances = j.at("instances").get<std::vector<std::string>>();
    if (cfg.instances.empty()) {
        throw std::invalid_argument("campaign lists no instances");
    }
    cfg.solve.engine = parse_engine(j.value("algorithm", std::string("tabucol")));
    cfg.solve.tenure = parse_tenure(j.value("tenure", std::string("dyn")));
    cfg.solve.init = parse_init(j.value("init", std::string("recycle-star")));
    cfg.solve.recycle_t = j.value("t", 1);
    cfg.solve.recolor = parse_recolor(j.value("recolor", std::string("random")));
    cfg.solve.time_limit_s = j.value("time_limit", 600.0);
    if (j.contains("iter_cap")) {
        const auto cap = j.at("iter_cap").get<long long>();
        if (cap < 0) {
            throw std::invalid_argument("iter_cap must be non-negative");
        }
        cfg.solve.iteration_cap = static_cast<std::uint64_t>(cap);
    }
    cfg.trials = j.value("trials", 50);
    cfg.base_seed = j.value("seed", std::uint64_t{1});
    cfg.output_dir = j.value("output_dir", std::string());
    cfg.jobs = j.value("jobs", 1);

    if (cfg.trials < 1) {
        throw std::invalid_argument("trials must be at least 1");
    }
    if (!(cfg.solve.time_limit_s > 0.0)) {
        throw std::invalid_argument("time_limit must be positive");
    }
    if (cfg.solve.init == InitKind::RecycleT && cfg.solve.recycle_t < 1) {
        throw std::invalid_argument("recycle t must be at least 1");
    }
    if (cfg.jobs < 1) {
        throw std::invalid_argument("jobs must be at least 1");
    }
    return cfg;
}

std::uint64_t trial_seed(std::uint64_t base_seed, int trial) {
    return base_seed ^ (static_cast<std::uint64_t>(trial) * 0x9E3779B97F4A7C15ULL);
}

std::string instance_name(const std::string& path) { return fs::path(path).stem().string(); }

SummaryRow summarize(const std::vector<RunRecord>& trials, bool iteration_clock) {
    if (trials.empty()) {
        throw std::invalid_argument("cannot summarize zero trials");
    }
    SummaryRow row;
    row.instance = trials.front().instance;
    row.algorithm = trials.front().algorithm;
    row.tenure = trials.front().tenure;
    row.init = trials.front().init;
    row.trials = static_cast<int>(trials.size());
    row.min_k = trials.front().best_k;
    std::vector<double> dsatur;
    for (const auto& t : trials) {
        row.min_k = std::min(row.min_k, t.best_k);
        dsatur.push_back(t.dsatur_k);
    }
    row.mean_dsatur_k = mean_of(dsatur);
    std::vector<double> times;
    for (const auto& t : trials) {
        if (t.best_k != row.min_k) {
            continue;
        }
        ++row.attain;
        for (const auto& level : t.levels) {
            if (level.legal && level.k == row.min_k) {
                times.push_back(iteration_clock ? static_cast<double>(level.cumulative_iterations)
                                                : level.elapsed_s);
                break;
            }
        }
    }
    row.mean_time = mean_of(times);
    return row;
}

std::vector<PenaltyPoint> mean_penalty_curve(const std::vector<RunRecord>& trials) {
    std::map<int, std::vector<double>, std::greater<>> by_k;
    for (const auto& t : trials) {
        for (const auto& level : t.levels) {
            if (!level.constructive) {
                by_k[level.k].push_back(static_cast<double>(level.initial_penalty));
            }
        }
    }
    std::vector<PenaltyPoint> curve;
    for (const auto& [k, values] : by_k) {
        curve.push_back({k, mean_of(values), sample_stddev(values), static_cast<int>(values.size())});
    }
    return curve;
}

std::vector<TimePoint> mean_time_to_k(const std::vector<RunRecord>& trials) {
    std::map<int, std::vector<double>, std::greater<>> by_k;
    for (const auto& t : trials) {
        for (const auto& level : t.levels) {
            if (level.legal) {
                by_k[level.k].push_back(level.elapsed_s);
            }
        }
    }
    std::vector<TimePoint> points;
    for (const auto& [k, values] : by_k) {
        points.push_back({k, mean_of(values), static_cast<int>(values.size())});
    }
    return points;
}

InstanceResult run_trials(const Graph& g, const std::string& instance, const CampaignConfig& cfg) {
    InstanceResult result;
    result.instance = instance;
    result.trials.resize(static_cast<std::size_t>(cfg.trials));
    SolveConfig solve = cfg.solve;
    solve.instance_id = instance;

    const int jobs = std::min(resolve_jobs(cfg.jobs), cfg.trials);
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (int i = next++; i < cfg.trials; i = next++) {
            try {
                result.trials[i] = solve_vcol(g, solve, trial_seed(cfg.base_seed, i));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    result.summary = summarize(result.trials, cfg.solve.iteration_cap.has_value());
    return result;
}

std::vector<InstanceResult> run_campaign(const CampaignConfig& cfg) {
    std::vector<InstanceResult> results;
    for (const auto& path : cfg.instances) {
        const Graph g = read_dimacs_file(path);
        results.push_back(run_trials(g, instance_name(path), cfg));
    }
    if (!cfg.output_dir.empty()) {
        write_campaign_outputs(cfg, results);
    }
    return results;
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows, bool iteration_clock) {
    out << "instance,algorithm,tenure,init,trials,min_k,attain,mean_dsatur_k,"
        << (iteration_clock ? "mean_iters" : "mean_time_s") << '\n';
    for (const auto& r : rows) {
        fmt::print(out, "{},{},{},{},{},{},{},{:.2f},{:.3f}\n", r.instance, r.algorithm, r.tenure,
                   r.init, r.trials, r.min_k, r.attain, r.mean_dsatur_k, r.mean_time);
    }
}

void write_penalty_csv(std::ostream& out, const std::vector<PenaltyPoint>& curve) {
    out << "k,mean_initial_penalty,stddev\n";
    for (const auto& p : curve) {
        fmt::print(out, "{},{:.3f},{:.3f}\n", p.k, p.mean, p.stddev);
    }
}

void write_trajectory_csv(std::ostream& out, const std::vector<TimePoint>& points) {
    out << "elapsed_s,k\n";
    for (const auto& p : points) {
        fmt::print(out, "{:.3f},{}\n", p.mean_elapsed_s, p.k);
    }
}

void write_campaign_outputs(const CampaignConfig& cfg, const std::vector<InstanceResult>& results) {
    const fs::path root(cfg.output_dir);
    fs::create_directories(root);
    std::vector<SummaryRow> rows;
    for (const auto& r : results) {
        const fs::path dir = root / r.instance;
        fs::create_directories(dir);
        for (std::size_t i = 0; i < r.trials.size(); ++i) {
            std::ofstream(dir / fmt::format("trial_{:03d}.json", i)) << to_json(r.trials[i]).dump(2)
                                                                     << '\n';
        }
        std::ofstream penalty(root / (r.instance + "_penalty.csv"));
        write_penalty_csv(penalty, mean_penalty_curve(r.trials));
        std::ofstream trajectory(root / (r.instance + "_trajectory.csv"));
        write_trajectory_csv(trajectory, mean_time_to_k(r.trials));
        rows.push_back(r.summary);
    }
    std::ofstream summary(root / "summary.csv");
    write_summary_csv(summary, rows, cfg.solve.iteration_cap.has_value());
}

Graph convert_carter(std::istream& in) {
    std::vector<std::vector<long long>> students;
    std::set<long long> exams;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string token;
        std::vector<long long> taken;
        while (fields >> token) {
            long long id = 0;
            std::size_t used = 0;
            try {
                id = std::stoll(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size()) {
                throw ParseError(line_no, "non-integer exam id '" + token + "'");
            }
            taken.push_back(id);
            exams.insert(id);
        }
        if (!taken.empty()) {
            students.push_back(std::move(taken));
        }
    }
    if (exams.empty()) {
        throw std::invalid_argument("timetabling file lists no exams");
    }
    std::map<long long, Vertex> index;
    for (long long id : exams) {
        index.emplace(id, static_cast<Vertex>(index.size()));
    }
    std::vector<Edge> edges;
    for (const auto& taken : students) {
        for (std::size_t a = 0; a < taken.size(); ++a) {
            for (std::size_t b = a + 1; b < taken.size(); ++b) {
                const Vertex u = index.at(taken[a]);
                const Vertex v = index.at(taken[b]);
                if (u != v) {
                    edges.emplace_back(u, v);
                }
            }
        }
    }
    return Graph::from_edges(static_cast<int>(exams.size()), edges);
}

std::string format_stats(const Graph& g) {
    const DegreeStats s = degree_stats(g);
    return fmt::format("n {}\nm {}\nmax_degree {}\nmean_degree {:.4f}\nstddev_degree {:.4f}\ncv_percent {:.2f}\n",
                       g.n(), g.m(), g.max_degree(), s.mean, s.stddev, s.cv);
}

}  // namespace recolor
