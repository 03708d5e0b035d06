// Writes the bundled groups, representations and sample quaternion matrices
// as JSON files into the given directory (default: data).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "studydet/fixtures.hpp"
#include "studydet/io.hpp"

namespace {

void write(const std::filesystem::path& path, const studydet::io::json& j) {
  std::ofstream out(path);
  out << j.dump(2) << "\n";
  std::cout << path.string() << "\n";
}

std::string file_stem(std::string name) {
  for (auto& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return name;
}

}  // namespace

int main(int argc, char** argv) {
  namespace fs = std::filesystem;
  using namespace studydet;
  fs::path dir = argc > 1 ? argv[1] : "data";
  fs::create_directories(dir);

  for (const auto& name : fixtures::names()) write(dir / (file_stem(name) + ".json"), io::group_to_json(fixtures::by_name(name)));
  write(dir / "s3_irreps.json", io::irreps_to_json(*fixtures::s3(), fixtures::s3_irreps()));
  write(dir / "q8_irreps.json", io::irreps_to_json(*fixtures::q8(), fixtures::q8_irreps()));

  auto h = quaternion_algebra();
  write(dir / "quaternion_1234.json", io::quaternion_matrix_to_json(QuaternionMatrix(1, 1, {quaternion(1, 2, 3, 4)})));
  write(dir / "quaternion_identity.json", io::quaternion_matrix_to_json(QuaternionMatrix::identity(2, h->one())));
  write(dir / "quaternion_zero.json", io::quaternion_matrix_to_json(QuaternionMatrix(2, 2, h->zero())));
  write(dir / "quaternion_jj.json",
        io::quaternion_matrix_to_json(QuaternionMatrix(2, 2, std::vector<Quaternion>(4, quaternion(0, 0, 1, 0)))));
  return 0;
}
