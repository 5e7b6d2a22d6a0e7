#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "recolor/driver.hpp"
#include "recolor/graph.hpp"

namespace recolor {

struct CampaignConfig {
    std::vector<std::string> instances;
    SolveConfig solve;
    int trials = 50;
    std::uint64_t base_seed = 1;
    std::string output_dir;  // empty: write nothing
    int jobs = 1;
};

// Keys: instances (array), algorithm, tenure, init, t, recolor, trials,
// time_limit, iter_cap, seed, output_dir, jobs. Unknown or invalid values
// throw std::invalid_argument.
CampaignConfig campaign_from_json(const nlohmann::json& j);

// Seed of trial i: the base seed mixed with an odd multiple of i.
std::uint64_t trial_seed(std::uint64_t base_seed, int trial);

// Stem of an instance path, used as its identifier.
std::string instance_name(const std::string& path);

struct SummaryRow {
    std::string instance;
    std::string algorithm;
    std::string tenure;
    std::string init;
    int trials = 0;
    int min_k = 0;
    int attain = 0;
    double mean_dsatur_k = 0.0;
    // Mean over attaining trials of the time (seconds, or iterations for an
    // iteration-capped campaign) at which min_k was reached.
    double mean_time = 0.0;
};

SummaryRow summarize(const std::vector<RunRecord>& trials, bool iteration_clock);

struct PenaltyPoint {
    int k = 0;
    double mean = 0.0;
    double stddev = 0.0;
    int samples = 0;
};

// Mean initial penalty per k over all generator-built levels, k descending.
std::vector<PenaltyPoint> mean_penalty_curve(const std::vector<RunRecord>& trials);

struct TimePoint {
    int k = 0;
    double mean_elapsed_s = 0.0;
    int samples = 0;
};

// Mean elapsed time at which each legal k was reached, k descending.
std::vector<TimePoint> mean_time_to_k(const std::vector<RunRecord>& trials);

struct InstanceResult {
    std::string instance;
    std::vector<RunRecord> trials;
    SummaryRow summary;
};

std::vector<InstanceResult> run_campaign(const CampaignConfig& cfg);

// Runs the trials of one already-loaded graph.
InstanceResult run_trials(const Graph& g, const std::string& instance, const CampaignConfig& cfg);

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows, bool iteration_clock);
void write_penalty_csv(std::ostream& out, const std::vector<PenaltyPoint>& curve);
void write_trajectory_csv(std::ostream& out, const std::vector<TimePoint>& points);

// Writes trial JSON files, summary.csv and per-instance figure data under
// cfg.output_dir.
void write_campaign_outputs(const CampaignConfig& cfg, const std::vector<InstanceResult>& results);

// Conflict graph of an exam timetabling instance in per-student layout: each
// line lists the exams one student takes. Exams become vertices in ascending
// id order; exams sharing a student are adjacent.
Graph convert_carter(std::istream& in);

// Multi-line report of n, m, max degree and degree statistics.
std::string format_stats(const Graph& g);

}  // namespace recolor
