#include "qeur/state_io.hpp"

#include <cstdio>
#include <fstream>
#include <utility>

#include "qeur/errors.hpp"

namespace qeur {

namespace {

const nlohmann::json& require_field(const nlohmann::json& doc,
                                    const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) {
    throw Error(std::string("state document missing field \"") + key + "\"");
  }
  return *it;
}

// Parses an array of rows into the real or imaginary part of the matrix.
void fill_part(const nlohmann::json& part, const char* key, ComplexMatrix& m,
               bool imaginary) {
  if (!part.is_array() || part.size() != m.rows()) {
    throw Error(std::string("field \"") + key + "\" must hold " +
                std::to_string(m.rows()) + " rows");
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const nlohmann::json& row = part[r];
    if (!row.is_array() || row.size() != m.cols()) {
      throw Error(std::string("field \"") + key + "\" row " +
                  std::to_string(r) + " must hold " +
                  std::to_string(m.cols()) + " numbers");
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!row[c].is_number()) {
        throw Error(std::string("field \"") + key +
                    "\" entries must be numbers");
      }
      const double v = row[c].get<double>();
      if (imaginary) {
        m(r, c) = Complex{m(r, c).real(), v};
      } else {
        m(r, c) = Complex{v, m(r, c).imag()};
      }
    }
  }
}

}  // namespace

DensityMatrix parse_state_json(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw Error("state document must be a JSON object");
  }
  const nlohmann::json& labels_doc = require_field(doc, "labels");
  const nlohmann::json& dims_doc = require_field(doc, "dims");
  if (!labels_doc.is_array() || labels_doc.empty()) {
    throw Error("field \"labels\" must be a nonempty array of strings");
  }
  if (!dims_doc.is_array() || dims_doc.size() != labels_doc.size()) {
    throw Error("field \"dims\" must match \"labels\" in length");
  }
  std::vector<std::string> labels;
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < labels_doc.size(); ++i) {
    if (!labels_doc[i].is_string()) {
      throw Error("field \"labels\" entries must be strings");
    }
    if (!dims_doc[i].is_number_integer() ||
        dims_doc[i].get<long long>() < 1) {
      throw Error("field \"dims\" entries must be positive integers");
    }
    labels.push_back(labels_doc[i].get<std::string>());
    dims.push_back(static_cast<std::size_t>(dims_doc[i].get<long long>()));
  }
  SystemLayout layout(std::move(labels), std::move(dims));

  ComplexMatrix m(layout.total_dim(), layout.total_dim());
  fill_part(require_field(doc, "matrix_re"), "matrix_re", m, false);
  fill_part(require_field(doc, "matrix_im"), "matrix_im", m, true);
  return DensityMatrix(std::move(layout), std::move(m));
}

nlohmann::ordered_json state_to_json(const DensityMatrix& rho) {
  nlohmann::ordered_json doc;
  doc["labels"] = rho.layout().labels();
  doc["dims"] = rho.layout().dims();
  nlohmann::ordered_json re = nlohmann::ordered_json::array();
  nlohmann::ordered_json im = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < rho.dim(); ++r) {
    nlohmann::ordered_json re_row = nlohmann::ordered_json::array();
    nlohmann::ordered_json im_row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < rho.dim(); ++c) {
      re_row.push_back(rho.matrix()(r, c).real());
      im_row.push_back(rho.matrix()(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  doc["matrix_re"] = std::move(re);
  doc["matrix_im"] = std::move(im);
  return doc;
}

DensityMatrix load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open state file \"" + path + "\"");
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("state file is not valid JSON: ") + e.what());
  }
  return parse_state_json(doc);
}

void save_state_file(const DensityMatrix& rho, const std::string& path) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) {
      throw IoError("cannot open \"" + tmp + "\" for writing");
    }
    out << state_to_json(rho).dump(2) << '\n';
    if (!out) {
      throw IoError("write to \"" + tmp + "\" failed");
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw IoError("cannot rename \"" + tmp + "\" to \"" + path + "\"");
  }
}

}  // namespace qeur
