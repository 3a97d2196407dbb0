/* Copyright 2026 The setcat Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef SETCAT_ERRORS_HPP_
#define SETCAT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace setcat {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: rejected at a construction boundary.
class InputError : public Error {
 public:
  using Error::Error;
};

// A requested computation would exceed a configured size cap.
class SizeCapError : public Error {
 public:
  SizeCapError(const std::string& what, std::size_t requested, std::size_t cap)
      : Error(what + " (requested " + std::to_string(requested) + ", cap " +
              std::to_string(cap) + ")"),
        requested(requested),
        cap(cap) {}
  std::size_t requested;
  std::size_t cap;
};

class UnknownAtomError : public InputError {
 public:
  explicit UnknownAtomError(const std::string& id)
      : InputError("unknown atom '" + id + "': not in the atom table"), id(id) {}
  std::string id;
};

class NotASetError : public InputError {
 public:
  using InputError::InputError;
};

class NotAPairError : public InputError {
 public:
  using InputError::InputError;
};

class UnboundVariableError : public InputError {
 public:
  explicit UnboundVariableError(const std::string& name)
      : InputError("unbound variable '" + name + "'"), name(name) {}
  std::string name;
};

// A binary relation handed to FinSetoid::from_relation failed one of the
// three equivalence laws.  `law` is "reflexivity", "symmetry" or
// "transitivity"; the witness elements are carrier indices.
class NotAnEquivalenceError : public InputError {
 public:
  NotAnEquivalenceError(std::string law, std::size_t x, std::size_t y, std::size_t z,
                        const std::string& detail)
      : InputError("not an equivalence relation: " + law + " fails " + detail),
        law(std::move(law)),
        x(x),
        y(y),
        z(z) {}
  std::string law;
  std::size_t x, y, z;
};

class NotExtensionalError : public InputError {
 public:
  NotExtensionalError(std::size_t x, std::size_t y)
      : InputError("map is not extensional: inputs " + std::to_string(x) + " and " +
                   std::to_string(y) + " are equal but their images are not"),
        x(x),
        y(y) {}
  std::size_t x, y;
};

// A family of setoids failed validation.  `law` is "identity" (transport on a
// reflexive pair is not the identity), "composition" (transports do not
// compose coherently) or "signature" (a transport has the wrong fibers).
class FamilyLawError : public InputError {
 public:
  FamilyLawError(std::string law, std::size_t x, std::size_t y, std::size_t z,
                 const std::string& detail)
      : InputError("family law violation (" + law + "): " + detail),
        law(std::move(law)),
        x(x),
        y(y),
        z(z) {}
  std::string law;
  std::size_t x, y, z;
};

class SignatureMismatchError : public InputError {
 public:
  using InputError::InputError;
};

// transport() was asked for a pair of index elements that are not equal.
class NotEqualError : public InputError {
 public:
  using InputError::InputError;
};

class MissingTerminalError : public InputError {
 public:
  MissingTerminalError() : InputError("category has no designated terminal object") {}
};

class NotACospanError : public InputError {
 public:
  using InputError::InputError;
};

class StageOverflowError : public InputError {
 public:
  using InputError::InputError;
};

class NotComposableError : public InputError {
 public:
  using InputError::InputError;
};

// Lexical or syntactic error in the surface language, with a 0-based
// character offset into the input.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : InputError(what + " (at offset " + std::to_string(pos) + ")"), pos(pos) {}
  std::size_t pos;
};

}  // namespace setcat

#endif  // SETCAT_ERRORS_HPP_
