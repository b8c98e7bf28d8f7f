#include "fincat/enumerate.hpp"

namespace fincat {

namespace {
void escape_into(std::string& out, const std::string& s) {
  for (char c : s) {
    if (c == '\\' || c == ',' || c == '<' || c == '>') out.push_back('\\');
    out.push_back(c);
  }
}
}  // namespace

std::string encode_tuple(const std::vector<std::string>& parts) {
  std::string out = "<";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(',');
    escape_into(out, parts[i]);
  }
  out.push_back('>');
  return out;
}

std::string encode_pair(const std::string& a, const std::string& b) {
  return encode_tuple({a, b});
}

std::vector<std::string> decode_tuple(const std::string& encoded) {
  if (encoded.size() < 2 || encoded.front() != '<' || encoded.back() != '>')
    throw Error("not an encoded tuple: " + encoded);
  std::vector<std::string> parts;
  std::string cur;
  bool any = encoded.size() > 2;
  for (std::size_t i = 1; i + 1 < encoded.size(); ++i) {
    char c = encoded[i];
    if (c == '\\' && i + 2 < encoded.size()) {
      cur.push_back(encoded[++i]);
    } else if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (any) parts.push_back(cur);
  return parts;
}

}  // namespace fincat
