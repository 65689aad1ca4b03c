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

#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qlb/compiler.hpp"
#include "qlb/simulator.hpp"

namespace qlb {

enum class BitOrder { canonical, reversed };
enum class ResultStyle { aggregated, per_shot };
enum class CouplingKind { full, linear_chain };

/// Which key names a backend uses in its result metadata. Mocks deliberately
/// disagree so the normalizer has something to normalize.
enum class MetadataDialect { plain, shorthand, sparse };

std::string bit_order_name(BitOrder o);
BitOrder bit_order_from_name(const std::string& name);
std::string result_style_name(ResultStyle s);
ResultStyle result_style_from_name(const std::string& name);
std::string coupling_kind_name(CouplingKind k);
CouplingKind coupling_kind_from_name(const std::string& name);
std::string dialect_name(MetadataDialect d);
MetadataDialect dialect_from_name(const std::string& name);

struct BackendDescriptor {
  std::string name;
  bool supports_batching = true;
  BitOrder bit_order = BitOrder::canonical;
  ResultStyle result_style = ResultStyle::aggregated;
  bool exposes_compiled = true;
  CouplingKind coupling_kind = CouplingKind::full;
  NativeSet native_set = NativeSet::extended;
  NoiseProfile noise;
  double queue_delay_ms = 0.0;
  bool supports_exact = false;
  MetadataDialect dialect = MetadataDialect::plain;

  /// Concrete device view for a circuit of the given width. Coupling presets
  /// are stored as a kind so one descriptor serves any circuit size.
  DeviceSpec device_spec_for(int qubit_count) const;
};

/// A backend's result in its own format: exactly one payload container is
/// populated, per `style`. Bit strings use the backend's own bit order.
struct RawResult {
  ResultStyle style = ResultStyle::aggregated;
  std::map<std::string, std::uint64_t> aggregated;
  std::vector<std::string> shots_list;
  std::map<std::string, std::string> metadata;
};

/// Marker stored for metadata a backend failed to report.
inline constexpr const char* kAbsentMarker = "(absent)";

struct NormalizedResult {
  Counts counts;
  std::string backend;
  std::string submitted_at = kAbsentMarker;
  std::string completed_at = kAbsentMarker;
  std::optional<CircuitStats> compiled_stats;
};

/// Re-encodes counts into a backend's quirky format. Inverse of normalize
/// on the counts payload.
RawResult encode_raw(const Counts& counts, BitOrder order, ResultStyle style,
                     std::map<std::string, std::string> metadata = {});

/// Aggregates per-shot payloads, undoes reversed bit order, and remaps the
/// quirky metadata keys onto the canonical record. Throws data_error when the
/// payload does not match the descriptor.
NormalizedResult normalize(const RawResult& raw, const BackendDescriptor& d);

struct JobHandle {
  std::uint64_t id = 0;
};

struct JobRecord {
  std::uint64_t id = 0;
  std::string backend;
  std::uint64_t shots = 0;
  std::string submitted_at;
  std::string completed_at;
  std::vector<RawResult> results;
};

nlohmann::json job_to_json(const JobRecord& rec);
JobRecord job_from_json(const nlohmann::json& j);

/// Shared job log. With a path, every completed job is appended to a JSON
/// lines file and previously persisted jobs are loaded on construction, so a
/// later process can fetch them by id.
class JobStore {
public:
  JobStore() = default;
  explicit JobStore(std::string path);

  std::uint64_t append(JobRecord rec);  // assigns the id
  JobRecord get(std::uint64_t id) const;
  std::size_t size() const;

private:
  mutable std::mutex mutex_;
  std::string path_;
  std::uint64_t next_id_ = 1;
  std::map<std::uint64_t, JobRecord> jobs_;
};

/// Executes circuits against the simulator dressed up with one descriptor's
/// capability and format quirks. Compiles per the device spec, samples with
/// the device noise, relabels outcomes back to logical qubits, then encodes
/// the result in the backend's native format.
class Backend {
public:
  Backend(BackendDescriptor descriptor, std::shared_ptr<JobStore> store);

  const BackendDescriptor& descriptor() const { return descriptor_; }
  void set_workers(unsigned workers) { workers_ = workers == 0 ? 1 : workers; }

  /// Circuit i samples with seed mix64(seed, i). Throws capability_error on a
  /// multi-circuit batch when the backend does not batch, before any
  /// compilation or simulation happens.
  JobHandle submit(const std::vector<Circuit>& circuits, std::uint64_t shots,
                   std::uint64_t seed);

  /// Same contract with explicit per-circuit seeds.
  JobHandle submit_seeded(const std::vector<Circuit>& circuits, std::uint64_t shots,
                          const std::vector<std::uint64_t>& seeds);

  /// One RawResult per submitted circuit. Blocks until the simulated queue
  /// delay has elapsed; repeated fetches return identical results.
  std::vector<RawResult> fetch(JobHandle job);

private:
  BackendDescriptor descriptor_;
  std::shared_ptr<JobStore> store_;
  unsigned workers_ = 1;
  std::mutex ready_mutex_;
  std::map<std::uint64_t, std::chrono::steady_clock::time_point> ready_at_;
};

/// Adapter entry point: batches when the backend supports it, loops
/// per circuit otherwise. Result i is always sampled with seed mix64(seed, i)
/// so the two paths are interchangeable.
std::vector<NormalizedResult> run_circuits(Backend& b, const std::vector<Circuit>& circuits,
                                           std::uint64_t shots, std::uint64_t seed,
                                           unsigned workers);

/// Noise-free expectation values through the backend's compilation path.
/// Throws capability_error unless the descriptor declares supports_exact and
/// zero noise.
std::vector<double> run_exact(Backend& b, const WeightedGraph& g,
                              const std::vector<Circuit>& circuits, unsigned workers);

/// The bundled descriptors: local-exact, mock-iontrap, mock-superconducting.
std::vector<BackendDescriptor> registry();

/// Custom backends from a config file: {"backends": [{...}, ...]}.
std::vector<BackendDescriptor> descriptors_from_json(const nlohmann::json& j);
nlohmann::json descriptor_to_json(const BackendDescriptor& d);

/// Looks up a name in `extra` first, then the bundled registry. Throws
/// usage_error when the name is unknown.
BackendDescriptor find_descriptor(const std::string& name,
                                  const std::vector<BackendDescriptor>& extra = {});

}  // namespace qlb
