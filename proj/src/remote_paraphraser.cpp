#include <cctype>

#include "hnlg/error.hpp"
#include "hnlg/paraphrase.hpp"
#include "httplib.h"

namespace hnlg {

RemoteParaphraser::RemoteParaphraser(std::string endpoint, std::chrono::milliseconds timeout,
                                     std::size_t max_sentence_length)
    : endpoint_(std::move(endpoint)), timeout_(timeout), max_len_(max_sentence_length) {
  constexpr std::string_view kScheme = "http://";
  if (endpoint_.rfind(kScheme, 0) != 0) throw InvalidInput("remote endpoint must start with http://: " + endpoint_);
  const std::size_t slash = endpoint_.find('/', kScheme.size());
  base_ = endpoint_.substr(0, slash);
  path_ = slash == std::string::npos ? "/" : endpoint_.substr(slash);
  if (base_.size() == kScheme.size()) throw InvalidInput("remote endpoint has no host: " + endpoint_);
}

ParaphraserCapabilities RemoteParaphraser::capabilities() const {
  // A fresh client per call, so concurrent callers share nothing.
  return {"remote:" + endpoint_, false, max_len_, true};
}

Sentence RemoteParaphraser::paraphrase(const Sentence& s, std::uint64_t, std::vector<std::string>& warnings) const {
  httplib::Client client(base_);
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(timeout_);
  const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(timeout_ - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  client.set_write_timeout(secs.count(), usecs.count());

  auto res = client.Post(path_, s.text, "text/plain; charset=utf-8");
  if (!res) throw RemoteUnavailable(endpoint_, httplib::to_string(res.error()));
  if (res->status != 200) throw RemoteUnavailable(endpoint_, "HTTP status " + std::to_string(res->status));

  Sentence out = s;
  out.provenance.push_back(Origin::Paraphrased);
  const auto replies = split_sentences(res->body);
  if (replies.size() != 1) {
    warnings.push_back("malformed reply from " + endpoint_ + ": expected one sentence, got " +
                       std::to_string(replies.size()) + "; kept input");
    return out;
  }
  out.text = replies.front();
  return out;
}

Sentence remote_paraphrase(const Sentence& s, const std::string& endpoint, std::chrono::milliseconds timeout,
                           std::vector<std::string>& warnings) {
  return RemoteParaphraser(endpoint, timeout).paraphrase(s, 0, warnings);
}

}  // namespace hnlg
