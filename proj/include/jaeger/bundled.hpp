// The corpus shipped with the library (data/corpus.txt, embedded at configure time).

#ifndef JAEGER_BUNDLED_HPP
#define JAEGER_BUNDLED_HPP

#include <vector>

#include "corpus.hpp"
#include "jaeger/corpus_data.hpp"

namespace jaeger {

inline const std::vector<CorpusEntry>& bundled_corpus() {
    static const std::vector<CorpusEntry> corpus = parse_corpus(detail::kBundledCorpusText);
    return corpus;
}

}  // namespace jaeger

#endif  // JAEGER_BUNDLED_HPP
