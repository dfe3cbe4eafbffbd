#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qcluster/dbs.hpp"
#include "qcluster/io.hpp"

namespace qcluster {

struct Reply {
    int status = 200;
    json body;
};

// "-f1+f3" style text for a degree written in the f-basis of the seed.
std::string f_text(const Seed& s, const ExpVec& g);
// Expansion of x_id in the initial frame; shared by the CLI and the server.
json var_report(const TrackedSeed& ts, VertexId id);
json seed_report(const TrackedSeed& ts);
// The new variable of every step of Sigma with its interval and degree.
json dbs_degree_table(const DbsData& data);
json tsystem_json(const TSystemReport& r);

// One exploration session: the current tracked seed with an undo stack and an optional dBS word.
// All requests go through handle(), which serializes them.
class Session {
  public:
    Session();  // starts on the quantized Kronecker word seed

    Reply handle(const std::string& method, const std::string& path, const std::string& body);

    void load_seed(const Seed& s);
    void load_word(const Word& w, const CartanData& c);
    const TrackedSeed& current() const { return stack_.back(); }
    std::size_t depth() const { return stack_.size(); }

  private:
    std::mutex mu_;
    std::vector<TrackedSeed> stack_;  // stack_[0] is the loaded seed
    std::optional<std::pair<Word, CartanData>> word_;
    std::unique_ptr<DbsData> dbs_;

    Reply dispatch(const std::string& method, const std::string& path, const json& body);
    const DbsData& dbs();
};

}  // namespace qcluster
