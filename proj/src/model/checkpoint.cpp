// Copyright 2026 The ink authors. Apache 2.0 License.

#include "ink/model/checkpoint.hpp"

#include <bit>
#include <cstring>

#include "ink/core/error.hpp"
#include "ink/data/corpus_io.hpp"
#include "ink/nn/lstm.hpp"

namespace ink {

namespace {

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t get_u64(std::string_view in, std::size_t at) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) {
    v = (v << 8) | static_cast<unsigned char>(in[at + static_cast<std::size_t>(i)]);
  }
  return v;
}

void put_f64(std::string& out, double d) { put_u64(out, std::bit_cast<std::uint64_t>(d)); }

double get_f64(std::string_view in, std::size_t at) {
  return std::bit_cast<double>(get_u64(in, at));
}

void append_group(const ParamStore& store, const char* group, nlohmann::json& tensors,
                  std::string& data) {
  for (std::size_t i = 0; i < store.size(); ++i) {
    const Array& a = store.at(i);
    tensors.push_back({{"group", group},
                       {"name", store.name(i)},
                       {"shape", a.shape().dims()},
                       {"offset", data.size()}});
    for (Real v : a.data()) put_f64(data, static_cast<double>(v));
  }
}

Shape shape_from(const nlohmann::json& dims) {
  switch (dims.size()) {
    case 0:
      return Shape::scalar();
    case 1:
      return Shape::vector(dims[0].get<std::size_t>());
    case 2:
      return Shape::matrix(dims[0].get<std::size_t>(), dims[1].get<std::size_t>());
    default:
      throw DataError("checkpoint: tensor rank above 2");
  }
}

}  // namespace

std::string encode_checkpoint(const Checkpoint& ckpt) {
  std::string data;
  nlohmann::json tensors = nlohmann::json::array();
  append_group(ckpt.params, "params", tensors, data);
  append_group(ckpt.optimizer, "optimizer", tensors, data);
  nlohmann::json manifest = {{"format", std::string(kCheckpointMagic)},
                             {"kind", ckpt.kind},
                             {"config", ckpt.config},
                             {"alphabet", ckpt.alphabet.symbols()},
                             {"stats", stats_to_json(ckpt.stats)},
                             {"gate_order", kGateOrder},
                             {"dtype", "binary64"},
                             {"state", ckpt.state},
                             {"data_bytes", data.size()},
                             {"tensors", tensors}};
  const std::string text = manifest.dump();
  std::string out(kCheckpointMagic);
  put_u64(out, text.size());
  out += text;
  out += data;
  return out;
}

Checkpoint decode_checkpoint(std::string_view bytes) {
  if (bytes.size() < 16 || bytes.substr(0, 8) != kCheckpointMagic) {
    throw DataError("checkpoint: bad magic");
  }
  const std::uint64_t n = get_u64(bytes, 8);
  if (n > bytes.size() - 16) throw DataError("checkpoint: truncated manifest");
  const std::string_view data = bytes.substr(16 + n);
  Checkpoint ckpt;
  try {
    const nlohmann::json manifest = nlohmann::json::parse(bytes.substr(16, n));
    if (manifest.at("gate_order").get<std::string>() != kGateOrder) {
      throw DataError("checkpoint: unsupported gate order");
    }
    if (manifest.at("dtype").get<std::string>() != "binary64") {
      throw DataError("checkpoint: unsupported dtype");
    }
    if (manifest.at("data_bytes").get<std::size_t>() != data.size()) {
      throw DataError("checkpoint: tensor data size mismatch");
    }
    ckpt.kind = manifest.at("kind").get<std::string>();
    ckpt.config = manifest.at("config");
    ckpt.alphabet = Alphabet(manifest.at("alphabet").get<std::string>());
    ckpt.stats = stats_from_json(manifest.at("stats"));
    ckpt.state = manifest.at("state");
    for (const auto& t : manifest.at("tensors")) {
      const Shape shape = shape_from(t.at("shape"));
      const std::size_t offset = t.at("offset").get<std::size_t>();
      const std::size_t count = shape.elements();
      if (offset > data.size() || count > (data.size() - offset) / 8) {
        throw DataError("checkpoint: tensor '" + t.at("name").get<std::string>() +
                        "' exceeds the data section");
      }
      std::vector<Real> values(count);
      for (std::size_t i = 0; i < count; ++i) {
        values[i] = static_cast<Real>(get_f64(data, offset + 8 * i));
      }
      const std::string group = t.at("group").get<std::string>();
      ParamStore* store = group == "params"      ? &ckpt.params
                          : group == "optimizer" ? &ckpt.optimizer
                                                 : nullptr;
      if (store == nullptr) throw DataError("checkpoint: unknown tensor group '" + group + "'");
      store->add(t.at("name").get<std::string>(), Array(shape, std::move(values)));
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("checkpoint: manifest: ") + e.what());
  } catch (const ContractError& e) {
    throw DataError(std::string("checkpoint: ") + e.what());
  }
  return ckpt;
}

void save_checkpoint(const Checkpoint& ckpt, const std::string& path) {
  write_file_atomic(path, encode_checkpoint(ckpt));
}

Checkpoint load_checkpoint(const std::string& path) { return decode_checkpoint(read_file(path)); }

}  // namespace ink
