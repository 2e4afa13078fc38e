#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dmt/corpus.hpp"
#include "dmt/delta_morse.hpp"
#include "dmt/morse.hpp"
#include "dmt/subdivision.hpp"

namespace testing {

using dmt::Simplex;

inline dmt::DiscreteVectorField field_of(const dmt::ComplexPtr& c,
                                         std::vector<std::pair<Simplex, Simplex>> pairs)
{
    return dmt::validate_field(c, pairs);
}

inline dmt::ComplexPtr corpus_complex(const std::string& name)
{
    return dmt::make_complex(dmt::find_corpus_entry(name).value().maximal_simplices);
}

inline std::vector<std::string> labels_to_strings(const std::vector<dmt::Label>& labels)
{
    std::vector<std::string> out;
    for (const auto& l : labels)
        out.push_back(l.to_string());
    return out;
}

}  // namespace testing

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

namespace testing {

/// Scratch directory removed on scope exit.
class TempDir {
public:
    TempDir()
    {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() /
                ("dmt-test-" + std::to_string(rd()) + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string file(const std::string& name) const { return (path_ / name).string(); }

    std::string write(const std::string& name, const std::string& text) const
    {
        std::ofstream(path_ / name) << text;
        return file(name);
    }

private:
    std::filesystem::path path_;
};

inline std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace testing
