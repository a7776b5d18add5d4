#include "dirac_edge/snapshot.hpp"

#include <bit>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dirac_edge {

static_assert(std::endian::native == std::endian::little,
              "snapshot format assumes a little-endian host");

namespace {

std::string time_label(double t) {
  std::ostringstream os;
  os << "t" << t;
  std::string s = os.str();
  for (char& c : s) {
    if (c == '.') c = 'p';
    if (c == '-') c = 'm';
  }
  return s;
}

}  // namespace

std::string write_snapshot(const std::string& dir, const std::string& tag,
                           const SpinorField& f, double t,
                           const std::string& geometry_tag) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const std::string stem = tag + "_" + time_label(t);
  const std::string bin_path = (fs::path(dir) / (stem + ".bin")).string();
  const std::string json_path = (fs::path(dir) / (stem + ".json")).string();

  std::ofstream bin(bin_path, std::ios::binary | std::ios::trunc);
  if (!bin) throw std::runtime_error("cannot open " + bin_path);
  const GridSpec& g = f.grid;
  std::vector<double> row(4 * g.n1);
  for (int i2 = 0; i2 < g.n2; ++i2) {
    for (int i1 = 0; i1 < g.n1; ++i1) {
      const std::size_t idx = g.index(i1, i2);
      row[4 * i1 + 0] = f.beta1[idx].real();
      row[4 * i1 + 1] = f.beta1[idx].imag();
      row[4 * i1 + 2] = f.beta2[idx].real();
      row[4 * i1 + 3] = f.beta2[idx].imag();
    }
    bin.write(reinterpret_cast<const char*>(row.data()),
              static_cast<std::streamsize>(row.size() * sizeof(double)));
  }
  bin.close();

  nlohmann::json meta{{"x1_min", g.x1_min}, {"x1_max", g.x1_max},
                      {"x2_min", g.x2_min}, {"x2_max", g.x2_max},
                      {"n1", g.n1},         {"n2", g.n2},
                      {"t", t},             {"geometry", geometry_tag}};
  std::ofstream js(json_path, std::ios::trunc);
  js << meta.dump(2) << "\n";
  return bin_path;
}

Snapshot read_snapshot(const std::string& bin_path) {
  std::string json_path = bin_path;
  if (json_path.size() > 4 && json_path.substr(json_path.size() - 4) == ".bin") {
    json_path = json_path.substr(0, json_path.size() - 4) + ".json";
  } else {
    throw std::invalid_argument("snapshot path must end in .bin");
  }
  std::ifstream js(json_path);
  if (!js) throw std::runtime_error("cannot open " + json_path);
  nlohmann::json meta;
  js >> meta;

  Snapshot snap;
  snap.t = meta.at("t").get<double>();
  snap.geometry_tag = meta.at("geometry").get<std::string>();
  const GridSpec g = make_grid(
      meta.at("x1_min").get<double>(), meta.at("x1_max").get<double>(),
      meta.at("x2_min").get<double>(), meta.at("x2_max").get<double>(),
      meta.at("n1").get<int>(), meta.at("n2").get<int>());
  snap.field = SpinorField(g);

  std::ifstream bin(bin_path, std::ios::binary);
  if (!bin) throw std::runtime_error("cannot open " + bin_path);
  std::vector<double> row(4 * g.n1);
  for (int i2 = 0; i2 < g.n2; ++i2) {
    bin.read(reinterpret_cast<char*>(row.data()),
             static_cast<std::streamsize>(row.size() * sizeof(double)));
    if (!bin) throw std::runtime_error("snapshot truncated: " + bin_path);
    for (int i1 = 0; i1 < g.n1; ++i1) {
      const std::size_t idx = g.index(i1, i2);
      snap.field.beta1[idx] = {row[4 * i1 + 0], row[4 * i1 + 1]};
      snap.field.beta2[idx] = {row[4 * i1 + 2], row[4 * i1 + 3]};
    }
  }
  return snap;
}

}  // namespace dirac_edge
