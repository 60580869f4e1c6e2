#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "graphhyp/census.hpp"
#include "json.hpp"

namespace graphhyp {

namespace {

using ordered_json = nlohmann::ordered_json;

struct CellKey {
  std::uint64_t mask = 0;
  std::uint64_t q = 0;
  friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

struct StoredCell {
  std::uint64_t count = 0;
  std::string engine;
  std::uint64_t millis = 0;
};

// Finished cells from an earlier run with the same n. A truncated or
// malformed trailing line is ignored.
std::map<CellKey, StoredCell> load_records(const std::filesystem::path& path, std::uint32_t n) {
  std::map<CellKey, StoredCell> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("count")) continue;
    if (j.value("n", 0U) != n) continue;
    out[{j.at("mask").get<std::uint64_t>(), j.at("q").get<std::uint64_t>()}] =
        StoredCell{j.at("count").get<std::uint64_t>(), j.at("engine").get<std::string>(),
                   j.value("millis", std::uint64_t{0})};
  }
  return out;
}

std::string record_line(std::uint32_t n, const CellKey& key, const CensusCell& cell) {
  ordered_json j;
  j["n"] = n;
  j["mask"] = key.mask;
  j["q"] = key.q;
  if (cell.projective_count) {
    j["count"] = *cell.projective_count;
  } else {
    j["error"] = cell.error;
  }
  j["engine"] = cell.engine;
  j["millis"] = cell.millis;
  return j.dump();
}

// Appends records in a fixed cell order: a finished cell is written once
// every cell before it is written, so the file is always an ordered prefix.
class OrderedWriter {
 public:
  OrderedWriter(std::optional<std::filesystem::path> path, std::uint32_t n, std::vector<CellKey> order)
      : n_(n), order_(std::move(order)), done_(order_.size(), nullptr) {
    if (path) {
      out_.open(*path, std::ios::trunc);
      if (!out_) throw std::runtime_error("cannot write " + path->string());
    }
  }

  void finish(std::size_t index, const CensusCell* cell) {
    std::lock_guard lock(mutex_);
    done_[index] = cell;
    while (next_ < order_.size() && done_[next_] != nullptr) {
      if (out_.is_open()) {
        out_ << record_line(n_, order_[next_], *done_[next_]) << '\n';
        out_.flush();
        if (!out_ && error_.empty()) {
          error_ = "write failed at record mask=" + std::to_string(order_[next_].mask) +
                   " q=" + std::to_string(order_[next_].q);
        }
      }
      ++next_;
    }
  }

  const std::string& error() const { return error_; }

 private:
  std::uint32_t n_;
  std::vector<CellKey> order_;
  std::vector<const CensusCell*> done_;
  std::size_t next_ = 0;
  std::mutex mutex_;
  std::ofstream out_;
  std::string error_;
};

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc | std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace

std::string_view census_status_name(CensusStatus s) {
  switch (s) {
    case CensusStatus::kPolynomial:
      return "polynomial";
    case CensusStatus::kInconsistent:
      return "inconsistent";
    case CensusStatus::kIncomplete:
      return "incomplete";
  }
  return "incomplete";
}

CensusReport main_theorem_check(const CensusOptions& options) {
  const std::uint32_t n = options.n;
  const int bound = census_degree_bound(n);
  if (options.fit_qs.size() < static_cast<std::size_t>(bound) + 1) {
    throw std::invalid_argument("main_theorem_check: need at least C(n,2) - 1 fitting fields");
  }
  std::set<std::uint64_t> q_set(options.fit_qs.begin(), options.fit_qs.end());
  q_set.insert(options.holdout_qs.begin(), options.holdout_qs.end());
  const std::vector<std::uint64_t> qs(q_set.begin(), q_set.end());
  std::map<std::uint64_t, FiniteField> fields;
  for (std::uint64_t q : qs) fields.emplace(q, FiniteField::of_order(q));

  CensusReport report;
  report.n = n;
  report.fit_qs = options.fit_qs;
  report.holdout_qs = options.holdout_qs;
  report.fault = options.fault;

  const std::vector<CensusTerm> terms = census_terms(n);
  report.multiplicities = multiplicity_check(n, terms);
  std::map<CanonicalKey, std::size_t> representative;  // key -> term index
  for (std::size_t i = 0; i < terms.size(); ++i) representative.emplace(terms[i].key, i);

  for (const CensusTerm& t : terms) {
    CensusRecord rec;
    rec.n = n;
    rec.term = t;
    for (std::uint64_t q : qs) rec.cells.push_back(CensusCell{q, std::nullopt, "", 0, ""});
    report.records.push_back(std::move(rec));
  }

  // Cells that are actually counted, in (mask, q) order. With the shortcut
  // only class representatives are counted, except at the smallest q.
  struct Job {
    std::size_t term;
    std::size_t cell;
  };
  std::vector<Job> jobs;
  std::vector<CellKey> job_keys;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const bool is_rep = representative.at(terms[t].key) == t;
    for (std::size_t c = 0; c < qs.size(); ++c) {
      if (options.use_multiplicity_shortcut && !is_rep && c != 0) continue;
      jobs.push_back({t, c});
      job_keys.push_back({terms[t].cut.mask(), qs[c]});
    }
  }

  std::map<CellKey, StoredCell> stored;
  std::optional<std::filesystem::path> records_path;
  if (options.out_dir) {
    std::filesystem::create_directories(*options.out_dir);
    records_path = *options.out_dir / "records.jsonl";
    stored = load_records(*records_path, n);
  }
  OrderedWriter writer(records_path, n, job_keys);

  std::vector<std::size_t> pending;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    CensusCell& cell = report.records[jobs[j].term].cells[jobs[j].cell];
    if (auto it = stored.find(job_keys[j]); it != stored.end()) {
      cell.projective_count = it->second.count;
      cell.engine = it->second.engine;
      cell.millis = it->second.millis;
      ++report.resumed_cells;
      writer.finish(j, &cell);
    } else {
      pending.push_back(j);
    }
  }
  // Largest cells first for better load balance; results do not depend on
  // the schedule.
  std::stable_sort(pending.begin(), pending.end(), [&](std::size_t a, std::size_t b) {
    const auto cost = [&](std::size_t j) {
      return std::make_pair(terms[jobs[j].term].graph.edge_count(), qs[jobs[j].cell]);
    };
    return cost(a) > cost(b);
  });

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= pending.size()) return;
      const std::size_t j = pending[i];
      const Job& job = jobs[j];
      CensusCell& cell = report.records[job.term].cells[job.cell];
      const auto start = std::chrono::steady_clock::now();
      try {
        const CountResult r = count_projective(psi(terms[job.term].graph), fields.at(qs[job.cell]), options.engine);
        cell.projective_count = r.projective_count;
        cell.engine = std::string(engine_name(r.engine));
      } catch (const std::exception& e) {
        cell.error = e.what();
        cell.engine = std::string(engine_name(options.engine));
      }
      if (options.record_timing) {
        cell.millis = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                     std::chrono::steady_clock::now() - start)
                                                     .count());
      }
      writer.finish(j, &cell);
    }
  };
  const unsigned threads = std::max(1U, options.threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (!writer.error().empty()) throw std::runtime_error(writer.error());

  if (options.use_multiplicity_shortcut) {
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::size_t rep = representative.at(terms[t].key);
      if (rep == t) continue;
      for (std::size_t c = 1; c < qs.size(); ++c) {
        CensusCell& cell = report.records[t].cells[c];
        const CensusCell& source = report.records[rep].cells[c];
        cell.projective_count = source.projective_count;
        cell.error = source.error;
        cell.engine = "shortcut";
      }
    }
  }

  if (options.fault) {
    for (CensusRecord& rec : report.records) {
      if (rec.term.cut != options.fault->cut) continue;
      for (CensusCell& cell : rec.cells) {
        if (cell.q == options.fault->q && cell.projective_count) {
          *cell.projective_count += static_cast<std::uint64_t>(options.fault->delta);
        }
      }
    }
  }

  for (std::size_t c = 0; c < qs.size(); ++c) {
    std::uint64_t total = 0;
    bool complete = true;
    for (const CensusRecord& rec : report.records) {
      if (rec.cells[c].projective_count) {
        total += *rec.cells[c].projective_count;
      } else {
        complete = false;
        ++report.failed_cells;
      }
    }
    if (complete) report.totals[qs[c]] = total;
  }

  if (options.use_multiplicity_shortcut && report.totals.contains(qs[0])) {
    ShortcutCheck check;
    check.q = qs[0];
    check.direct_total = report.totals.at(qs[0]);
    for (const IsoClassRow& row : report.multiplicities.classes) {
      const std::size_t rep = representative.at(row.key);
      check.shortcut_total += row.observed * report.records[rep].cells[0].projective_count.value_or(0);
    }
    report.shortcut = check;
  }

  if (report.failed_cells > 0) {
    report.status = CensusStatus::kIncomplete;
  } else {
    std::vector<CountNode> fit;
    std::vector<CountNode> holdout;
    for (std::uint64_t q : options.fit_qs) fit.push_back({q, report.totals.at(q)});
    for (std::uint64_t q : options.holdout_qs) holdout.push_back({q, report.totals.at(q)});
    report.verdict = interpolate_counts(fit, bound, holdout);
    const bool sound = report.multiplicities.ok() && (!report.shortcut || report.shortcut->holds());
    report.status = report.verdict->status == VerdictStatus::kPolynomial && sound ? CensusStatus::kPolynomial
                                                                                   : CensusStatus::kInconsistent;
  }

  if (options.out_dir) {
    write_file(*options.out_dir / "census.csv", census_csv(report));
    write_file(*options.out_dir / "report.json", census_json(report));
  }
  return report;
}

std::string census_csv(const CensusReport& report) {
  std::ostringstream out;
  out << "n,subset_mask,canon_key,aut_order,q,projective_count,engine,millis\n";
  for (const CensusRecord& rec : report.records) {
    for (const CensusCell& cell : rec.cells) {
      out << rec.n << ',' << rec.term.cut.mask() << ',' << rec.term.key.to_string() << ',' << rec.term.aut_order
          << ',' << cell.q << ',';
      if (cell.projective_count) {
        out << *cell.projective_count;
      } else {
        out << "FAILED";
      }
      out << ',' << cell.engine << ',' << cell.millis << '\n';
    }
  }
  return out.str();
}

std::string census_json(const CensusReport& report) {
  ordered_json j;
  j["n"] = report.n;
  j["fit_q"] = report.fit_qs;
  j["holdout_q"] = report.holdout_qs;
  j["degree_bound"] = census_degree_bound(report.n);
  j["status"] = census_status_name(report.status);
  j["term_count"] = report.records.size();
  ordered_json totals = ordered_json::object();
  for (const auto& [q, total] : report.totals) totals[std::to_string(q)] = total;
  j["totals"] = totals;
  if (report.verdict) {
    const InterpolationVerdict& v = *report.verdict;
    ordered_json vj;
    vj["status"] = v.status == VerdictStatus::kPolynomial ? "polynomial" : "inconsistent";
    vj["degree_bound"] = v.degree_bound;
    if (v.fitted) {
      vj["class"] = v.fitted->to_string();
      vj["coefficients"] = v.fitted->coefficients();
    }
    if (!v.reason.empty()) vj["reason"] = v.reason;
    auto nodes = [](const std::vector<CountNode>& ns) {
      ordered_json arr = ordered_json::array();
      for (const CountNode& node : ns) arr.push_back({{"q", node.q}, {"count", node.count}});
      return arr;
    };
    vj["fit_nodes"] = nodes(v.fit_nodes);
    vj["holdout_nodes"] = nodes(v.holdout_nodes);
    j["verdict"] = vj;
  } else {
    j["verdict"] = nullptr;
  }
  ordered_json classes = ordered_json::array();
  for (const IsoClassRow& row : report.multiplicities.classes) {
    ordered_json c;
    c["key"] = row.key.to_string();
    c["representative_mask"] = row.representative_cut.mask();
    c["representative"] = format_graph(row.representative);
    c["aut_order"] = row.aut_order;
    c["observed"] = row.observed;
    c["expected"] = row.expected;
    classes.push_back(c);
  }
  j["classes"] = classes;
  j["multiplicity_ok"] = report.multiplicities.ok();
  if (report.shortcut) {
    j["shortcut"] = {{"q", report.shortcut->q},
                     {"shortcut_total", report.shortcut->shortcut_total},
                     {"direct_total", report.shortcut->direct_total},
                     {"holds", report.shortcut->holds()}};
  } else {
    j["shortcut"] = nullptr;
  }
  if (report.fault) {
    j["fault"] = {{"mask", report.fault->cut.mask()}, {"q", report.fault->q}, {"delta", report.fault->delta}};
  } else {
    j["fault"] = nullptr;
  }
  j["failed_cells"] = report.failed_cells;
  return j.dump(2) + "\n";
}

}  // namespace graphhyp
