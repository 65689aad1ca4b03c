// Copyright 2026 The qlb authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qlb/backends.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "qlb/errors.hpp"
#include "qlb/parallel.hpp"
#include "qlb/rng.hpp"
#include "qlb/util.hpp"

namespace qlb {

namespace {

const std::vector<std::string> kBackendAliases = {"backend", "device", "provider"};
const std::vector<std::string> kShotsAliases = {"shots", "n_shots", "num_shots"};
const std::vector<std::string> kSubmittedAliases = {"submitted_at", "submitted", "ts_submit"};
const std::vector<std::string> kCompletedAliases = {"completed_at", "finished", "ts_complete"};

std::string lookup(const std::map<std::string, std::string>& metadata,
                   const std::vector<std::string>& aliases) {
  for (const auto& key : aliases) {
    auto it = metadata.find(key);
    if (it != metadata.end()) return it->second;
  }
  return kAbsentMarker;
}

std::map<std::string, std::string> dialect_metadata(const BackendDescriptor& d,
                                                    std::uint64_t shots,
                                                    const std::string& submitted,
                                                    const std::string& completed) {
  std::map<std::string, std::string> m;
  switch (d.dialect) {
    case MetadataDialect::plain:
      m["backend"] = d.name;
      m["shots"] = std::to_string(shots);
      m["submitted_at"] = submitted;
      m["completed_at"] = completed;
      break;
    case MetadataDialect::shorthand:
      m["backend"] = d.name;
      m["n_shots"] = std::to_string(shots);
      m["submitted"] = submitted;
      m["finished"] = completed;
      break;
    case MetadataDialect::sparse:
      // No completion timestamp at all, mirroring providers that omit
      // execution-time information.
      m["device"] = d.name;
      m["shots"] = std::to_string(shots);
      m["ts_submit"] = submitted;
      break;
  }
  return m;
}

}  // namespace

std::string bit_order_name(BitOrder o) {
  return o == BitOrder::canonical ? "canonical" : "reversed";
}

BitOrder bit_order_from_name(const std::string& name) {
  if (name == "canonical") return BitOrder::canonical;
  if (name == "reversed") return BitOrder::reversed;
  throw data_error("unknown bit order \"" + name + "\"");
}

std::string result_style_name(ResultStyle s) {
  return s == ResultStyle::aggregated ? "aggregated" : "per_shot";
}

ResultStyle result_style_from_name(const std::string& name) {
  if (name == "aggregated") return ResultStyle::aggregated;
  if (name == "per_shot") return ResultStyle::per_shot;
  throw data_error("unknown result style \"" + name + "\"");
}

std::string coupling_kind_name(CouplingKind k) {
  return k == CouplingKind::full ? "full" : "linear_chain";
}

std::string dialect_name(MetadataDialect d) {
  switch (d) {
    case MetadataDialect::plain: return "plain";
    case MetadataDialect::shorthand: return "shorthand";
    case MetadataDialect::sparse: return "sparse";
  }
  return "plain";
}

MetadataDialect dialect_from_name(const std::string& name) {
  if (name == "plain") return MetadataDialect::plain;
  if (name == "shorthand") return MetadataDialect::shorthand;
  if (name == "sparse") return MetadataDialect::sparse;
  throw data_error("unknown metadata dialect \"" + name + "\"");
}

CouplingKind coupling_kind_from_name(const std::string& name) {
  if (name == "full") return CouplingKind::full;
  if (name == "linear_chain") return CouplingKind::linear_chain;
  throw data_error("unknown coupling kind \"" + name + "\"");
}

DeviceSpec BackendDescriptor::device_spec_for(int qubit_count) const {
  DeviceSpec spec;
  spec.coupling = coupling_kind == CouplingKind::full ? CouplingMap::full(qubit_count)
                                                      : CouplingMap::linear_chain(qubit_count);
  spec.native_set = native_set;
  spec.label = name;
  return spec;
}

RawResult encode_raw(const Counts& counts, BitOrder order, ResultStyle style,
                     std::map<std::string, std::string> metadata) {
  RawResult raw;
  raw.style = style;
  raw.metadata = std::move(metadata);
  for (const auto& [assignment, count] : counts.histogram) {
    std::string s = assignment;
    if (order == BitOrder::reversed) std::reverse(s.begin(), s.end());
    if (style == ResultStyle::aggregated) {
      raw.aggregated[s] += count;
    } else {
      for (std::uint64_t i = 0; i < count; ++i) raw.shots_list.push_back(s);
    }
  }
  return raw;
}

NormalizedResult normalize(const RawResult& raw, const BackendDescriptor& d) {
  if (raw.style != d.result_style)
    throw data_error("normalize: payload style does not match descriptor of " + d.name);
  NormalizedResult result;
  if (raw.style == ResultStyle::aggregated) {
    if (!raw.shots_list.empty())
      throw data_error("normalize: aggregated payload carries a shot list");
    for (const auto& [s, count] : raw.aggregated) {
      std::string key = s;
      if (d.bit_order == BitOrder::reversed) std::reverse(key.begin(), key.end());
      result.counts.histogram[key] += count;
      result.counts.shots += count;
    }
  } else {
    if (!raw.aggregated.empty())
      throw data_error("normalize: per-shot payload carries an aggregated map");
    for (const std::string& s : raw.shots_list) {
      std::string key = s;
      if (d.bit_order == BitOrder::reversed) std::reverse(key.begin(), key.end());
      ++result.counts.histogram[key];
      ++result.counts.shots;
    }
  }
  result.backend = lookup(raw.metadata, kBackendAliases);
  result.submitted_at = lookup(raw.metadata, kSubmittedAliases);
  result.completed_at = lookup(raw.metadata, kCompletedAliases);
  std::string shots_text = lookup(raw.metadata, kShotsAliases);
  if (shots_text != kAbsentMarker &&
      shots_text != std::to_string(result.counts.shots))
    throw data_error("normalize: metadata shot count disagrees with the payload");
  auto depth = raw.metadata.find("compiled_depth");
  auto twoq = raw.metadata.find("compiled_two_qubit");
  auto total = raw.metadata.find("compiled_gates");
  if (depth != raw.metadata.end() && twoq != raw.metadata.end() && total != raw.metadata.end()) {
    CircuitStats stats;
    stats.depth = std::stoi(depth->second);
    stats.two_qubit_count = std::stoi(twoq->second);
    stats.gate_count = std::stoi(total->second);
    result.compiled_stats = stats;
  }
  return result;
}

nlohmann::json job_to_json(const JobRecord& rec) {
  nlohmann::json results = nlohmann::json::array();
  for (const RawResult& raw : rec.results) {
    nlohmann::json r;
    r["style"] = result_style_name(raw.style);
    if (raw.style == ResultStyle::aggregated) {
      nlohmann::json hist = nlohmann::json::object();
      for (const auto& [s, count] : raw.aggregated) hist[s] = count;
      r["aggregated"] = hist;
    } else {
      r["shots_list"] = raw.shots_list;
    }
    r["metadata"] = raw.metadata;
    results.push_back(r);
  }
  return {{"id", rec.id},
          {"backend", rec.backend},
          {"shots", rec.shots},
          {"submitted_at", rec.submitted_at},
          {"completed_at", rec.completed_at},
          {"results", results}};
}

JobRecord job_from_json(const nlohmann::json& j) {
  JobRecord rec;
  try {
    rec.id = j.at("id").get<std::uint64_t>();
    rec.backend = j.at("backend").get<std::string>();
    rec.shots = j.at("shots").get<std::uint64_t>();
    rec.submitted_at = j.at("submitted_at").get<std::string>();
    rec.completed_at = j.at("completed_at").get<std::string>();
    for (const auto& r : j.at("results")) {
      RawResult raw;
      raw.style = result_style_from_name(r.at("style").get<std::string>());
      if (raw.style == ResultStyle::aggregated) {
        for (const auto& [key, value] : r.at("aggregated").items())
          raw.aggregated[key] = value.get<std::uint64_t>();
      } else {
        raw.shots_list = r.at("shots_list").get<std::vector<std::string>>();
      }
      raw.metadata = r.at("metadata").get<std::map<std::string, std::string>>();
      rec.results.push_back(std::move(raw));
    }
  } catch (const nlohmann::json::exception& e) {
    throw data_error(std::string("job record: ") + e.what());
  }
  return rec;
}

JobStore::JobStore(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in.is_open()) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    JobRecord rec = job_from_json(nlohmann::json::parse(line, nullptr, true));
    next_id_ = std::max(next_id_, rec.id + 1);
    jobs_.emplace(rec.id, std::move(rec));
  }
}

std::uint64_t JobStore::append(JobRecord rec) {
  std::lock_guard<std::mutex> lock(mutex_);
  rec.id = next_id_++;
  if (!path_.empty()) {
    std::ofstream out(path_, std::ios::app);
    if (!out.is_open()) throw data_error("job store: cannot open " + path_);
    out << job_to_json(rec).dump() << "\n";
  }
  std::uint64_t id = rec.id;
  jobs_.emplace(id, std::move(rec));
  return id;
}

JobRecord JobStore::get(std::uint64_t id) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = jobs_.find(id);
  if (it == jobs_.end()) throw data_error("job store: unknown job id " + std::to_string(id));
  return it->second;
}

std::size_t JobStore::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return jobs_.size();
}

Backend::Backend(BackendDescriptor descriptor, std::shared_ptr<JobStore> store)
    : descriptor_(std::move(descriptor)), store_(std::move(store)) {
  if (!store_) store_ = std::make_shared<JobStore>();
  validate_noise(descriptor_.noise);
}

JobHandle Backend::submit(const std::vector<Circuit>& circuits, std::uint64_t shots,
                          std::uint64_t seed) {
  std::vector<std::uint64_t> seeds(circuits.size());
  for (std::size_t i = 0; i < circuits.size(); ++i) seeds[i] = mix64(seed, i);
  return submit_seeded(circuits, shots, seeds);
}

JobHandle Backend::submit_seeded(const std::vector<Circuit>& circuits, std::uint64_t shots,
                                 const std::vector<std::uint64_t>& seeds) {
  if (circuits.empty()) throw std::invalid_argument("submit: empty circuit list");
  if (seeds.size() != circuits.size())
    throw std::invalid_argument("submit: need one seed per circuit");
  if (circuits.size() > 1 && !descriptor_.supports_batching)
    throw capability_error("backend '" + descriptor_.name +
                           "' does not support batching; submit circuits one at a time");
  if (shots == 0) throw std::invalid_argument("submit: shots must be positive");

  JobRecord rec;
  rec.backend = descriptor_.name;
  rec.shots = shots;
  rec.submitted_at = iso8601_now();
  rec.results.resize(circuits.size());
  parallel_for(circuits.size(), workers_, [&](std::size_t i) {
    const Circuit& logical = circuits[i];
    CompiledCircuit compiled =
        compile_circuit(logical, descriptor_.device_spec_for(logical.qubit_count));
    std::vector<std::uint64_t> outcomes =
        sample_shots(compiled.circuit, shots, descriptor_.noise, seeds[i]);
    RawResult& raw = rec.results[i];
    raw.style = descriptor_.result_style;
    for (std::uint64_t physical : outcomes) {
      std::uint64_t logical_index = relabel_index(physical, compiled.final_layout);
      std::string s = assignment_from_index(logical_index, logical.qubit_count);
      if (descriptor_.bit_order == BitOrder::reversed) std::reverse(s.begin(), s.end());
      if (raw.style == ResultStyle::aggregated)
        ++raw.aggregated[s];
      else
        raw.shots_list.push_back(std::move(s));
    }
    if (descriptor_.exposes_compiled) {
      raw.metadata["compiled_depth"] = std::to_string(compiled.stats.depth);
      raw.metadata["compiled_two_qubit"] = std::to_string(compiled.stats.two_qubit_count);
      raw.metadata["compiled_gates"] = std::to_string(compiled.stats.gate_count);
    }
  });
  rec.completed_at = iso8601_now();
  for (RawResult& raw : rec.results)
    raw.metadata.merge(dialect_metadata(descriptor_, shots, rec.submitted_at, rec.completed_at));

  JobHandle handle{store_->append(rec)};
  {
    std::lock_guard<std::mutex> lock(ready_mutex_);
    ready_at_[handle.id] = std::chrono::steady_clock::now() +
                           std::chrono::microseconds(
                               static_cast<std::int64_t>(descriptor_.queue_delay_ms * 1000.0));
  }
  return handle;
}

std::vector<RawResult> Backend::fetch(JobHandle job) {
  std::chrono::steady_clock::time_point ready{};
  {
    std::lock_guard<std::mutex> lock(ready_mutex_);
    auto it = ready_at_.find(job.id);
    if (it != ready_at_.end()) ready = it->second;
  }
  std::this_thread::sleep_until(ready);
  return store_->get(job.id).results;
}

std::vector<NormalizedResult> run_circuits(Backend& b, const std::vector<Circuit>& circuits,
                                           std::uint64_t shots, std::uint64_t seed,
                                           unsigned workers) {
  std::vector<NormalizedResult> results(circuits.size());
  if (b.descriptor().supports_batching) {
    b.set_workers(workers);
    std::vector<RawResult> raw = b.fetch(b.submit(circuits, shots, seed));
    for (std::size_t i = 0; i < raw.size(); ++i) results[i] = normalize(raw[i], b.descriptor());
  } else {
    b.set_workers(1);
    parallel_for(circuits.size(), workers, [&](std::size_t i) {
      JobHandle handle = b.submit_seeded({circuits[i]}, shots, {mix64(seed, i)});
      results[i] = normalize(b.fetch(handle).at(0), b.descriptor());
    });
  }
  return results;
}

std::vector<double> run_exact(Backend& b, const WeightedGraph& g,
                              const std::vector<Circuit>& circuits, unsigned workers) {
  const BackendDescriptor& d = b.descriptor();
  if (!d.supports_exact || !d.noise.is_zero())
    throw capability_error("backend '" + d.name +
                           "' cannot provide exact expectation values; use a shot count");
  std::vector<double> energies(circuits.size());
  parallel_for(circuits.size(), workers, [&](std::size_t i) {
    CompiledCircuit compiled =
        compile_circuit(circuits[i], d.device_spec_for(circuits[i].qubit_count));
    std::vector<double> p = simulate_exact(compiled.circuit);
    double e = 0.0;
    for (std::size_t physical = 0; physical < p.size(); ++physical)
      e += p[physical] * energy_index(g, relabel_index(physical, compiled.final_layout));
    energies[i] = e;
  });
  return energies;
}

std::vector<BackendDescriptor> registry() {
  BackendDescriptor local;
  local.name = "local-exact";
  local.supports_batching = true;
  local.bit_order = BitOrder::canonical;
  local.result_style = ResultStyle::aggregated;
  local.exposes_compiled = true;
  local.coupling_kind = CouplingKind::full;
  local.native_set = NativeSet::extended;
  local.noise = {0.0, 0.0, 0.0, "noise-free"};
  local.queue_delay_ms = 0.0;
  local.supports_exact = true;
  local.dialect = MetadataDialect::plain;

  BackendDescriptor ion;
  ion.name = "mock-iontrap";
  ion.supports_batching = true;
  ion.bit_order = BitOrder::canonical;
  ion.result_style = ResultStyle::aggregated;
  ion.exposes_compiled = true;
  ion.coupling_kind = CouplingKind::full;
  ion.native_set = NativeSet::extended;
  ion.noise = {0.0005, 0.005, 0.002, "iontrap-like"};
  ion.queue_delay_ms = 25.0;
  ion.supports_exact = false;
  ion.dialect = MetadataDialect::shorthand;

  BackendDescriptor super;
  super.name = "mock-superconducting";
  super.supports_batching = false;
  super.bit_order = BitOrder::reversed;
  super.result_style = ResultStyle::per_shot;
  super.exposes_compiled = false;
  super.coupling_kind = CouplingKind::linear_chain;
  super.native_set = NativeSet::restricted;
  super.noise = {0.003, 0.03, 0.02, "superconducting-like"};
  super.queue_delay_ms = 10.0;
  super.supports_exact = false;
  super.dialect = MetadataDialect::sparse;

  return {local, ion, super};
}

nlohmann::json descriptor_to_json(const BackendDescriptor& d) {
  return {{"name", d.name},
          {"supports_batching", d.supports_batching},
          {"bit_order", bit_order_name(d.bit_order)},
          {"result_style", result_style_name(d.result_style)},
          {"exposes_compiled", d.exposes_compiled},
          {"coupling", coupling_kind_name(d.coupling_kind)},
          {"native_set", native_set_name(d.native_set)},
          {"noise",
           {{"p1", d.noise.p1},
            {"p2", d.noise.p2},
            {"p_readout", d.noise.p_readout},
            {"label", d.noise.label}}},
          {"queue_delay_ms", d.queue_delay_ms},
          {"supports_exact", d.supports_exact},
          {"metadata_dialect", dialect_name(d.dialect)}};
}

std::vector<BackendDescriptor> descriptors_from_json(const nlohmann::json& j) {
  std::vector<BackendDescriptor> result;
  if (!j.is_object()) throw data_error("backend config: expected a JSON object");
  if (!j.contains("backends")) return result;
  if (!j["backends"].is_array()) throw data_error("backend config: \"backends\" must be an array");
  for (const auto& rec : j["backends"]) {
    if (!rec.is_object() || !rec.contains("name") || !rec["name"].is_string())
      throw data_error("backend config: each backend needs a \"name\"");
    BackendDescriptor d;
    d.name = rec["name"].get<std::string>();
    if (rec.contains("supports_batching")) d.supports_batching = rec["supports_batching"].get<bool>();
    if (rec.contains("bit_order")) d.bit_order = bit_order_from_name(rec["bit_order"].get<std::string>());
    if (rec.contains("result_style"))
      d.result_style = result_style_from_name(rec["result_style"].get<std::string>());
    if (rec.contains("exposes_compiled")) d.exposes_compiled = rec["exposes_compiled"].get<bool>();
    if (rec.contains("coupling")) d.coupling_kind = coupling_kind_from_name(rec["coupling"].get<std::string>());
    if (rec.contains("native_set"))
      d.native_set = native_set_from_name(rec["native_set"].get<std::string>());
    if (rec.contains("noise")) {
      const auto& n = rec["noise"];
      if (n.contains("p1")) d.noise.p1 = n["p1"].get<double>();
      if (n.contains("p2")) d.noise.p2 = n["p2"].get<double>();
      if (n.contains("p_readout")) d.noise.p_readout = n["p_readout"].get<double>();
      if (n.contains("label")) d.noise.label = n["label"].get<std::string>();
    }
    if (rec.contains("queue_delay_ms")) d.queue_delay_ms = rec["queue_delay_ms"].get<double>();
    if (rec.contains("supports_exact")) d.supports_exact = rec["supports_exact"].get<bool>();
    if (rec.contains("metadata_dialect"))
      d.dialect = dialect_from_name(rec["metadata_dialect"].get<std::string>());
    validate_noise(d.noise);
    result.push_back(std::move(d));
  }
  return result;
}

BackendDescriptor find_descriptor(const std::string& name,
                                  const std::vector<BackendDescriptor>& extra) {
  for (const BackendDescriptor& d : extra)
    if (d.name == name) return d;
  for (const BackendDescriptor& d : registry())
    if (d.name == name) return d;
  throw usage_error("unknown backend '" + name + "'");
}

}  // namespace qlb
