/*
   Copyright 2026 The cvm authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CVM_ERRORS_HPP
#define CVM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cvm {

// Base class for all domain errors.  The CLI maps these to exit code 1.
class Error : public std::runtime_error {
   public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class FieldMismatch : public Error {
   public:
    explicit FieldMismatch(const std::string& what) : Error(what) {}
};

class DivisionByZero : public Error {
   public:
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

class InvalidModulus : public Error {
   public:
    explicit InvalidModulus(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
   public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class SingularMatrix : public Error {
   public:
    explicit SingularMatrix(const std::string& what) : Error(what) {}
};

class ZeroDiagonal : public Error {
   public:
    explicit ZeroDiagonal(const std::string& what) : Error(what) {}
};

class EmptyMultiset : public Error {
   public:
    explicit EmptyMultiset(const std::string& what) : Error(what) {}
};

// Two entries of a node multiset coincide in the working field.  Carries the
// positions of the clashing entries plus the canonical spelling of the node
// that was seen first, so front ends can compose a precise diagnostic.
class DuplicateNode : public Error {
   public:
    DuplicateNode(const std::string& what, std::size_t existing, std::size_t duplicate,
                  std::string canonical)
        : Error(what),
          existing_index(existing),
          duplicate_index(duplicate),
          canonical_value(std::move(canonical)) {}

    std::size_t existing_index;
    std::size_t duplicate_index;
    std::string canonical_value;
};

class DegreeTooHigh : public Error {
   public:
    explicit DegreeTooHigh(const std::string& what) : Error(what) {}
};

class LengthMismatch : public Error {
   public:
    explicit LengthMismatch(const std::string& what) : Error(what) {}
};

class ResidueDegreeTooHigh : public Error {
   public:
    explicit ResidueDegreeTooHigh(const std::string& what) : Error(what) {}
};

class PreconditionViolation : public Error {
   public:
    explicit PreconditionViolation(const std::string& what) : Error(what) {}
};

// Malformed input text.  Not a domain error; the CLI maps this to exit code 2.
class ParseError : public std::runtime_error {
   public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cvm

#endif  // CVM_ERRORS_HPP
