// Writes the deterministic synthetic corpus fixture as a
// directory-per-class tree, so the CLI can be exercised offline.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "tcms/synthetic.hpp"

int main(int argc, char** argv) {
    if (argc < 2 || argc > 3) {
        std::fprintf(stderr, "usage: %s <output-dir> [seed]\n", argv[0]);
        return 1;
    }
    tcms::SyntheticSpec spec;
    if (argc == 3) spec.seed = std::strtoull(argv[2], nullptr, 10);
    try {
        tcms::write_corpus_dir(tcms::make_synthetic_docs(spec), argv[1]);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    std::printf("fixture written to %s (%d classes x %d docs, seed %llu)\n",
                argv[1], spec.classes, spec.docs_per_class,
                static_cast<unsigned long long>(spec.seed));
    return 0;
}
