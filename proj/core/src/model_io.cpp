#include "orcd/model_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "orcd/errors.hpp"

namespace orcd {
namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key) {
  if (!obj.contains(key)) throw ValidationError("missing field", std::string("/") + key);
  return obj.at(key);
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) throw ValidationError("expected a number", path);
  return v.get<double>();
}

std::vector<double> number_array(const json& v, const std::string& path) {
  if (!v.is_array()) throw ValidationError("expected an array", path);
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(number(v[i], path + "/" + std::to_string(i)));
  return out;
}

StateChannel read_channel(const json& v, const std::string& path) {
  if (!v.is_array() || v.empty()) throw ValidationError("expected [input][state][output] array", path);
  const std::size_t inputs = v.size();
  std::size_t states = 0;
  std::size_t outputs = 0;
  std::vector<double> table;
  for (std::size_t x = 0; x < inputs; ++x) {
    const std::string px = path + "/" + std::to_string(x);
    if (!v[x].is_array() || v[x].empty()) throw ValidationError("expected [state][output] array", px);
    if (x == 0) states = v[x].size();
    if (v[x].size() != states) throw ValidationError("ragged state axis", px);
    for (std::size_t z = 0; z < states; ++z) {
      const std::string pz = px + "/" + std::to_string(z);
      std::vector<double> row = number_array(v[x][z], pz);
      if (x == 0 && z == 0) outputs = row.size();
      if (row.size() != outputs || outputs == 0) throw ValidationError("ragged output axis", pz);
      try {
        const Pmf checked(row);
      } catch (const ValidationError& e) {
        throw ValidationError(e.message(), pz);
      }
      table.insert(table.end(), row.begin(), row.end());
    }
  }
  return StateChannel(inputs, states, outputs, std::move(table));
}

json write_channel(const StateChannel& c) {
  json out = json::array();
  for (std::size_t x = 0; x < c.inputs(); ++x) {
    json per_state = json::array();
    for (std::size_t z = 0; z < c.states(); ++z) {
      json row = json::array();
      for (std::size_t y = 0; y < c.outputs(); ++y) row.push_back(c(x, z, y));
      per_state.push_back(std::move(row));
    }
    out.push_back(std::move(per_state));
  }
  return out;
}

template <typename Params>
Params read_scalar_model(const json& doc, std::initializer_list<std::pair<const char*, double Params::*>> fields) {
  Params p;
  for (const auto& [key, member] : fields) p.*member = number(field(doc, key), std::string("/") + key);
  try {
    p.validate();
  } catch (const ValidationError& e) {
    throw ValidationError(e.message(), "/" + e.path());
  }
  return p;
}

DiscreteOrcd read_discrete(const json& doc) {
  std::vector<double> pz_raw = number_array(field(doc, "p_z"), "/p_z");
  Pmf p_z = [&] {
    try {
      return Pmf(pz_raw);
    } catch (const ValidationError& e) {
      throw ValidationError(e.message(), "/p_z");
    }
  }();

  auto channel = [&](const char* key) -> std::optional<StateChannel> {
    if (!doc.contains(key)) return std::nullopt;
    try {
      return read_channel(doc.at(key), std::string("/") + key);
    } catch (const ValidationError& e) {
      if (e.path().rfind("/", 0) == 0) throw;
      throw ValidationError(e.message(), std::string("/") + key + e.path());
    }
  };

  std::optional<double> pipe;
  if (doc.contains("r1")) pipe = number(doc.at("r1"), "/r1");

  auto sr = channel("chan_sr");
  if (!sr) throw ValidationError("missing field", "/chan_sr");
  auto rd = channel("chan_rd");
  if (!rd && !pipe) throw ValidationError("either chan_rd or r1 is required", "/chan_rd");
  auto sd = channel("chan_sd");

  DiscreteOrcd m = [&] {
    try {
      return DiscreteOrcd(p_z, *sr, rd ? *rd : StateChannel::trivial(p_z.size()),
                          sd ? *sd : StateChannel::trivial(p_z.size()), pipe);
    } catch (const ValidationError& e) {
      throw ValidationError(e.message(), "/" + e.path());
    }
  }();

  if (doc.contains("alphabets")) {
    const json& a = doc.at("alphabets");
    if (!a.is_object()) throw ValidationError("expected an object", "/alphabets");
    const Alphabets got = m.alphabets();
    const std::pair<const char*, std::size_t> sizes[] = {{"x1", got.x1}, {"x2", got.x2}, {"xr", got.xr},
                                                         {"yr", got.yr}, {"y1", got.y1}, {"y2", got.y2},
                                                         {"z", got.z}};
    for (const auto& [key, actual] : sizes) {
      if (!a.contains(key)) continue;
      const std::string path = std::string("/alphabets/") + key;
      if (!a.at(key).is_number_unsigned() || a.at(key).get<std::size_t>() != actual) {
        throw ValidationError("declared size disagrees with tables (" + std::to_string(actual) + ")", path);
      }
    }
  }
  return m;
}

}  // namespace

ModelSpec parse_model(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("model document must be an object", "/");
  const json& type = field(doc, "type");
  if (!type.is_string()) throw ValidationError("expected a string", "/type");
  const std::string t = type.get<std::string>();

  if (t == "discrete_orcd") return read_discrete(doc);
  if (t == "parallel_binary") {
    return read_scalar_model<ParallelBinaryMrcd>(
        doc, {{"delta", &ParallelBinaryMrcd::delta}, {"p_z", &ParallelBinaryMrcd::p_z}, {"r1", &ParallelBinaryMrcd::r1}});
  }
  if (t == "binary") {
    return read_scalar_model<BinaryMrcd>(
        doc, {{"delta", &BinaryMrcd::delta}, {"p_z", &BinaryMrcd::p_z}, {"r1", &BinaryMrcd::r1}});
  }
  if (t == "gaussian") {
    return read_scalar_model<GaussianMrcd>(
        doc, {{"power", &GaussianMrcd::power}, {"rho", &GaussianMrcd::rho}, {"r1", &GaussianMrcd::r1}});
  }
  throw ValidationError("unknown model type '" + t + "'", "/type");
}

ModelSpec load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open model file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_model(text.str());
}

std::string model_to_json(const ModelSpec& model, int indent) {
  json doc = std::visit(
      [](const auto& m) -> json {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, DiscreteOrcd>) {
          const Alphabets a = m.alphabets();
          json d = {{"type", "discrete_orcd"},
                    {"alphabets",
                     {{"x1", a.x1}, {"x2", a.x2}, {"xr", a.xr}, {"yr", a.yr}, {"y1", a.y1}, {"y2", a.y2}, {"z", a.z}}},
                    {"p_z", std::vector<double>(m.p_z().probs().begin(), m.p_z().probs().end())},
                    {"chan_sr", write_channel(m.chan_sr())},
                    {"chan_rd", write_channel(m.chan_rd())},
                    {"chan_sd", write_channel(m.chan_sd())}};
          if (m.relay_pipe_rate()) d["r1"] = *m.relay_pipe_rate();
          return d;
        } else if constexpr (std::is_same_v<T, ParallelBinaryMrcd>) {
          return {{"type", "parallel_binary"}, {"delta", m.delta}, {"p_z", m.p_z}, {"r1", m.r1}};
        } else if constexpr (std::is_same_v<T, BinaryMrcd>) {
          return {{"type", "binary"}, {"delta", m.delta}, {"p_z", m.p_z}, {"r1", m.r1}};
        } else {
          return {{"type", "gaussian"}, {"power", m.power}, {"rho", m.rho}, {"r1", m.r1}};
        }
      },
      model);
  return doc.dump(indent);
}

DiscreteOrcd to_discrete(const ModelSpec& model) {
  return std::visit(
      [](const auto& m) -> DiscreteOrcd {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, DiscreteOrcd>) {
          return m;
        } else if constexpr (std::is_same_v<T, ParallelBinaryMrcd>) {
          return embed_parallel_binary(m);
        } else if constexpr (std::is_same_v<T, BinaryMrcd>) {
          return embed_binary(m);
        } else {
          throw UsageError("Gaussian models have no discrete form; use the closed-form rates");
        }
      },
      model);
}

}  // namespace orcd
