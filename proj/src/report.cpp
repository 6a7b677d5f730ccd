#include "kmconv/report.hpp"

#include <optional>
#include <ostream>
#include <set>

#include "kmconv/errors.hpp"

namespace kmconv {

OrderedJson matrix_json(CartanMatrix const& cm) {
  OrderedJson rows = OrderedJson::array();
  for (int i = 1; i <= cm.rank(); ++i) {
    OrderedJson row = OrderedJson::array();
    for (int j = 1; j <= cm.rank(); ++j) {
      row.push_back(static_cast<long>(cm.a(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

OrderedJson word_json(Word const& w) {
  OrderedJson a = OrderedJson::array();
  for (int i : w) {
    a.push_back(i);
  }
  return a;
}

OrderedJson coords_json(RootVector const& v) {
  OrderedJson a = OrderedJson::array();
  for (auto const& c : v.coords) {
    a.push_back(static_cast<long>(c));
  }
  return a;
}

OrderedJson rationals_json(RatVec const& v) {
  OrderedJson a = OrderedJson::array();
  for (auto const& q : v) {
    a.push_back(rational_string(q));
  }
  return a;
}

void write_shell_table_csv(std::ostream& out, ShellTable const& table,
                           std::vector<std::pair<std::string, std::string>> const& meta,
                           unsigned digits) {
  for (auto const& [key, value] : meta) {
    out << "# " << key << ": " << value << "\n";
  }
  if (table.group_exhausted) {
    out << "# note: group exhausted before max_length; trailing shells are empty\n";
  }
  out << "length,count,shell_abs_sum,partial_sum,ratio\n";
  for (auto const& row : table.rows) {
    out << row.length << "," << row.count << ","
        << format_real_sci(row.abs_sum, digits) << ","
        << format_real_sci(row.partial_sum, digits) << ",";
    if (row.ratio) {
      out << format_real_sci(*row.ratio, digits);
    }
    out << "\n";
  }
}

OrderedJson property_report_json(CartanMatrix const& cm, PropertyReport const& report) {
  OrderedJson j;
  j["matrix"] = matrix_json(cm);
  j["status"] = report.status == PropertyStatus::holds_up_to ? "holds_up_to"
                                                             : "fails_at";
  j["length"] = report.length;
  j["elements_checked"] = report.elements_checked;
  if (report.failing) {
    j["word"] = word_json(report.failing->word());
    OrderedJson violations = OrderedJson::array();
    for (auto const& v : report.violations) {
      OrderedJson row;
      row["decomposition"] = OrderedJson{{"v_word", word_json(v.v_word)},
                                         {"beta", v.beta}};
      row["alpha"] = coords_json(v.alpha);
      row["alpha_minus_beta"] = coords_json(v.alpha_minus_beta);
      violations.push_back(std::move(row));
    }
    j["violations"] = std::move(violations);
  }
  return j;
}

namespace {

Word parse_word_json(OrderedJson const& j, std::vector<std::string>& problems,
                     std::string const& what) {
  Word w;
  if (!j.is_array()) {
    problems.push_back(what + " is not an array");
    return w;
  }
  for (auto const& x : j) {
    if (!x.is_number_integer()) {
      problems.push_back(what + " has a non-integer letter");
      return {};
    }
    w.push_back(x.get<int>());
  }
  return w;
}

RootVector parse_coords_json(OrderedJson const& j, int rank,
                             std::vector<std::string>& problems,
                             std::string const& what) {
  RootVector v;
  if (!j.is_array() || static_cast<int>(j.size()) != rank) {
    problems.push_back(what + " has the wrong shape");
    return v;
  }
  for (auto const& x : j) {
    if (!x.is_number_integer()) {
      problems.push_back(what + " has a non-integer coordinate");
      return {};
    }
    v.coords.push_back(Int(x.get<long>()));
  }
  return v;
}

}  // namespace

CertificateVerdict verify_certificate(std::string const& json_text) {
  CertificateVerdict verdict;
  auto& problems = verdict.problems;

  OrderedJson cert;
  try {
    cert = OrderedJson::parse(json_text);
  } catch (OrderedJson::parse_error const& e) {
    problems.push_back(std::string("invalid JSON: ") + e.what());
    return verdict;
  }
  if (!cert.is_object() || !cert.contains("matrix") || !cert.contains("status") ||
      !cert.contains("length")) {
    problems.push_back("certificate must carry matrix, status and length");
    return verdict;
  }

  std::optional<CartanMatrix> cm_opt;
  try {
    IntMat entries;
    for (auto const& row : cert["matrix"]) {
      IntVec r;
      for (auto const& x : row) {
        r.push_back(Int(x.get<long>()));
      }
      entries.push_back(std::move(r));
    }
    cm_opt = CartanMatrix::validate(std::move(entries));
  } catch (std::exception const& e) {
    problems.push_back(std::string("matrix does not validate: ") + e.what());
    return verdict;
  }
  CartanMatrix const& cm = *cm_opt;

  std::string const status = cert["status"].get<std::string>();
  int const length = cert["length"].get<int>();

  if (status == "holds_up_to") {
    PropertyReport fresh = check_property(cm, length);
    if (fresh.status != PropertyStatus::holds_up_to) {
      problems.push_back("recomputation finds a failure at length " +
                         std::to_string(fresh.length));
    }
    if (cert.contains("elements_checked") &&
        cert["elements_checked"].get<long>() != fresh.elements_checked) {
      problems.push_back("element count differs from recomputation");
    }
    verdict.ok = problems.empty();
    return verdict;
  }
  if (status != "fails_at") {
    problems.push_back("unknown status '" + status + "'");
    return verdict;
  }

  if (!cert.contains("word") || !cert.contains("violations")) {
    problems.push_back("fails_at certificate must carry word and violations");
    return verdict;
  }
  Word word = parse_word_json(cert["word"], problems, "word");
  if (!problems.empty()) {
    return verdict;
  }
  if (!is_reduced(cm, word)) {
    problems.push_back("failing word is not reduced");
    return verdict;
  }
  WeylElement w = WeylElement::from_word(cm, word);
  if (w.length() != length) {
    problems.push_back("length field does not match the failing word");
  }

  // Structural check of every row.
  std::set<int> betas_seen;
  for (auto const& row : cert["violations"]) {
    if (!row.contains("decomposition") || !row.contains("alpha") ||
        !row.contains("alpha_minus_beta")) {
      problems.push_back("violation row lacks a field");
      continue;
    }
    auto const& dec = row["decomposition"];
    Word v_word = parse_word_json(dec["v_word"], problems, "v_word");
    int beta = dec["beta"].get<int>();
    if (beta < 1 || beta > cm.rank()) {
      problems.push_back("beta out of range");
      continue;
    }
    if (!is_reduced(cm, v_word)) {
      problems.push_back("v_word is not reduced");
      continue;
    }
    WeylElement v = WeylElement::from_word(cm, v_word);
    if (!(multiply_generator(cm, v, beta) == w)) {
      problems.push_back("v * w_beta does not recover the failing element");
      continue;
    }
    RootVector alpha = parse_coords_json(row["alpha"], cm.rank(), problems, "alpha");
    RootVector diff =
        parse_coords_json(row["alpha_minus_beta"], cm.rank(), problems,
                          "alpha_minus_beta");
    if (alpha.coords.empty() || diff.coords.empty()) {
      continue;
    }
    RootVector expected = alpha;
    expected.coords[beta - 1] -= 1;
    if (!(expected == diff)) {
      problems.push_back("alpha_minus_beta is not alpha - beta");
      continue;
    }
    bool in_phi = false;
    for (auto const& phi_root : phi_w(cm, v)) {
      if (phi_root == alpha) {
        in_phi = true;
        break;
      }
    }
    if (!in_phi) {
      problems.push_back("alpha does not lie in Phi_v");
      continue;
    }
    if (!is_root(cm, diff)) {
      problems.push_back("alpha - beta is not a root; the row is not a violation");
      continue;
    }
    betas_seen.insert(beta);
  }

  // Completeness: every legal decomposition must be covered, and a fresh
  // check must agree that the element is not admissible.
  for (auto const& dec : decompositions(cm, w)) {
    if (!betas_seen.contains(dec.beta)) {
      problems.push_back("decomposition with beta = " + std::to_string(dec.beta) +
                         " has no violation row");
    }
  }
  ElementCheck fresh = check_element(cm, w);
  if (fresh.admissible) {
    problems.push_back("recomputation finds the element admissible");
  }
  PropertyReport fresh_scan = check_property(cm, length);
  if (fresh_scan.status != PropertyStatus::fails_at ||
      !fresh_scan.failing || !(fresh_scan.failing->word() == word)) {
    problems.push_back("recomputation does not reproduce this failing element");
  }

  verdict.ok = problems.empty();
  return verdict;
}

OrderedJson certificate_verdict_json(CertificateVerdict const& verdict) {
  OrderedJson j;
  j["verified"] = verdict.ok;
  OrderedJson p = OrderedJson::array();
  for (auto const& s : verdict.problems) {
    p.push_back(s);
  }
  j["problems"] = std::move(p);
  return j;
}

}  // namespace kmconv
