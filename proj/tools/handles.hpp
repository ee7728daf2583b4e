#pragma once

#include <utility>

#include "qgelgamal.h"

// Scoped owners for the C handles used throughout the tool.
template <typename T, void (*Free)(T*)>
class Handle {
public:
    Handle() = default;
    explicit Handle(T* p) : ptr_(p) {}
    ~Handle() { reset(); }

    Handle(Handle&& other) noexcept : ptr_(std::exchange(other.ptr_, nullptr)) {}
    Handle& operator=(Handle&& other) noexcept {
        if (this != &other) {
            reset();
            ptr_ = std::exchange(other.ptr_, nullptr);
        }
        return *this;
    }
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;

    // for functions with a T** output parameter
    T** out() {
        reset();
        return &ptr_;
    }

    T* get() const { return ptr_; }
    operator T*() const { return ptr_; }

private:
    void reset() {
        if (ptr_) {
            Free(ptr_);
            ptr_ = nullptr;
        }
    }

    T* ptr_ = nullptr;
};

using PermHandle = Handle<qgel_perm, qgel_perm_free>;
using QuasigroupHandle = Handle<qgel_quasigroup, qgel_quasigroup_free>;
using IsotopyHandle = Handle<qgel_isotopy, qgel_isotopy_free>;
using RngHandle = Handle<qgel_rng, qgel_rng_free>;
using PublicKeyHandle = Handle<qgel_public_key, qgel_public_key_free>;
using PrivateKeyHandle = Handle<qgel_private_key, qgel_private_key_free>;
using CiphertextHandle = Handle<qgel_ciphertext, qgel_ciphertext_free>;

class CString {
public:
    CString() = default;
    ~CString() { qgel_string_free(ptr_); }
    CString(const CString&) = delete;
    CString& operator=(const CString&) = delete;

    char** out() { return &ptr_; }
    const char* get() const { return ptr_ ? ptr_ : ""; }

private:
    char* ptr_ = nullptr;
};
