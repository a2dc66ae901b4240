#include "cli.hpp"

int main(int argc, char** argv) {
  frontmesh::cli::RunManifest manifest;
  if (auto code = frontmesh::cli::parse_args(argc, argv, manifest)) return *code;
  return frontmesh::cli::run(manifest);
}
