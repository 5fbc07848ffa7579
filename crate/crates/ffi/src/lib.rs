//! C interface to `functor_tor`.
//!
//! Categories and modules are opaque handles created by `ft_*` constructors and released
//! with the matching `*_free` function. Every fallible call returns an [`FtStatus`]; on
//! failure a description is available from [`ft_last_error_message`] on the same thread.
//! Coefficient fields are selected by an integer `p`: `0` for the rationals, a prime for
//! the field with `p` elements.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};

use functor_tor::catalog::category_by_name;
use functor_tor::catmod::json::{module_from_json_over, ModuleJson};
use functor_tor::catmod::{make_representable, make_trivial, CatModule, Variance};
use functor_tor::fincat::json::{from_json as category_from_json, CategoryJson};
use functor_tor::fincat::{validate_category, FinCategory};
use functor_tor::hochschild::{algebra_from_json, bimodule_from_json, cyclic_oracle, hochschild_oracle, AlgebraJson, BimoduleJson};
use functor_tor::linalg::{Field, PrimeField, Rationals};
use functor_tor::tor::{tor, CoverStrategy, Side};
use functor_tor::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FtStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    Json = 4,
    NotAGroup = 5,
    NotCrossed = 6,
    BaseMismatch = 7,
    FieldMismatch = 8,
    MarginViolation = 9,
    NotAssociative = 10,
    NotUnital = 11,
    RelationViolation = 12,
    Unsupported = 13,
    BufferTooSmall = 14,
    Internal = 15,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FtVariance {
    Covariant = 0,
    Contravariant = 1,
}

/// Which argument of Tor is resolved.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FtSide {
    ResolveContravariant = 0,
    ResolveCovariant = 1,
}

/// A finite category.
pub struct FtCategory {
    inner: FinCategory,
    label: String,
}

enum AnyModule {
    Rational(CatModule<Rationals>),
    Prime(CatModule<PrimeField>),
}

/// A module (functor to finite-dimensional vector spaces) over an [`FtCategory`].
pub struct FtModule {
    inner: AnyModule,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

struct Failure(FtStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::NotAGroup(_) => FtStatus::NotAGroup,
            Error::NotCrossed { .. } => FtStatus::NotCrossed,
            Error::BaseMismatch(_) => FtStatus::BaseMismatch,
            Error::FieldMismatch { .. } => FtStatus::FieldMismatch,
            Error::MarginViolation { .. } => FtStatus::MarginViolation,
            Error::NotAssociative(_) => FtStatus::NotAssociative,
            Error::NotUnital(_) => FtStatus::NotUnital,
            Error::RelationViolation(_) => FtStatus::RelationViolation,
            Error::UnsupportedCharacteristic(_) | Error::BimoduleNotAlgebra => FtStatus::Unsupported,
            Error::Json(_) => FtStatus::Json,
            Error::NotAComplex { .. } => FtStatus::Internal,
            _ => FtStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure(FtStatus::Json, e.to_string())
    }
}

fn fail<T>(status: FtStatus, msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure(status, msg.into()))
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> FtStatus {
    let outcome = catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|panic| {
        let msg = panic
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| panic.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "panic".into());
        Err(Failure(FtStatus::Internal, msg))
    });
    match outcome {
        Ok(()) => {
            LAST_ERROR.with(|e| e.borrow_mut().clear());
            FtStatus::Ok
        }
        Err(Failure(status, msg)) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = msg);
            status
        }
    }
}

unsafe fn text<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if ptr.is_null() {
        return fail(FtStatus::NullArgument, format!("{what} is null"));
    }
    CStr::from_ptr(ptr).to_str().or_else(|_| fail(FtStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn borrow<'a, T>(ptr: *const T, what: &str) -> Result<&'a T, Failure> {
    ptr.as_ref().ok_or_else(|| Failure(FtStatus::NullArgument, format!("{what} is null")))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return fail(FtStatus::NullArgument, "output pointer is null");
    }
    out.write(value);
    Ok(())
}

unsafe fn write_dims(dims: &[usize], out: *mut usize, len: usize) -> Result<(), Failure> {
    if out.is_null() {
        return fail(FtStatus::NullArgument, "output buffer is null");
    }
    if len < dims.len() {
        return fail(FtStatus::BufferTooSmall, format!("need {} entries, buffer holds {len}", dims.len()));
    }
    std::slice::from_raw_parts_mut(out, dims.len()).copy_from_slice(dims);
    Ok(())
}

fn prime(p: u32) -> Result<Option<PrimeField>, Failure> {
    if p == 0 {
        Ok(None)
    } else {
        Ok(Some(PrimeField::new(p)?))
    }
}

fn variance(v: FtVariance) -> Variance {
    match v {
        FtVariance::Covariant => Variance::Covariant,
        FtVariance::Contravariant => Variance::Contravariant,
    }
}

fn build_module(p: u32, make: impl Fn(&dyn AnyField) -> Result<AnyModule, Error>) -> Result<AnyModule, Failure> {
    Ok(match prime(p)? {
        None => make(&Rationals)?,
        Some(f) => make(&f)?,
    })
}

/// Object-safe dispatch from a runtime field choice to the generic constructors.
trait AnyField {
    fn trivial(&self, c: &FinCategory, v: Variance) -> AnyModule;
    fn representable(&self, c: &FinCategory, a: usize, v: Variance) -> AnyModule;
    fn from_json(&self, j: &ModuleJson, c: &FinCategory, label: &str) -> Result<AnyModule, Error>;
}

impl AnyField for Rationals {
    fn trivial(&self, c: &FinCategory, v: Variance) -> AnyModule {
        AnyModule::Rational(make_trivial(self, c, v))
    }
    fn representable(&self, c: &FinCategory, a: usize, v: Variance) -> AnyModule {
        AnyModule::Rational(make_representable(self, c, a, v))
    }
    fn from_json(&self, j: &ModuleJson, c: &FinCategory, label: &str) -> Result<AnyModule, Error> {
        module_from_json_over(self, j, c, label).map(AnyModule::Rational)
    }
}

impl AnyField for PrimeField {
    fn trivial(&self, c: &FinCategory, v: Variance) -> AnyModule {
        AnyModule::Prime(make_trivial(self, c, v))
    }
    fn representable(&self, c: &FinCategory, a: usize, v: Variance) -> AnyModule {
        AnyModule::Prime(make_representable(self, c, a, v))
    }
    fn from_json(&self, j: &ModuleJson, c: &FinCategory, label: &str) -> Result<AnyModule, Error> {
        module_from_json_over(self, j, c, label).map(AnyModule::Prime)
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ft_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Length in bytes of the last error message on this thread, excluding the terminator.
#[no_mangle]
pub extern "C" fn ft_last_error_length() -> usize {
    LAST_ERROR.with(|e| e.borrow().len())
}

/// Copies the last error message on this thread into `buf` with a NUL terminator.
///
/// # Safety
/// `buf` must be valid for writes of `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn ft_last_error_message(buf: *mut c_char, len: usize) -> FtStatus {
    let msg = LAST_ERROR.with(|e| e.borrow().clone());
    if buf.is_null() {
        return FtStatus::NullArgument;
    }
    if len < msg.len() + 1 {
        return FtStatus::BufferTooSmall;
    }
    let dst = std::slice::from_raw_parts_mut(buf.cast::<u8>(), msg.len() + 1);
    dst[..msg.len()].copy_from_slice(msg.as_bytes());
    dst[msg.len()] = 0;
    FtStatus::Ok
}

/// Builds a built-in category from a name such as `"f_as:3"`, `"delta:2"` or `"cyclic:4"`.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ft_category_builtin(spec: *const c_char, out: *mut *mut FtCategory) -> FtStatus {
    guard(|| {
        let spec = text(spec, "spec")?;
        let inner = category_by_name(spec)?;
        write_out(out, Box::into_raw(Box::new(FtCategory { inner, label: spec.to_string() })))
    })
}

/// Builds a category from its JSON composition table.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ft_category_from_json(json: *const c_char, out: *mut *mut FtCategory) -> FtStatus {
    guard(|| {
        let j: CategoryJson = serde_json::from_str(text(json, "json")?)?;
        let inner = category_from_json(&j)?;
        let label = j.name.clone().unwrap_or_else(|| inner.name().to_string());
        write_out(out, Box::into_raw(Box::new(FtCategory { inner, label })))
    })
}

/// Releases a category. Modules built over it stay valid.
///
/// # Safety
/// `cat` must come from an `ft_category_*` constructor and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ft_category_free(cat: *mut FtCategory) {
    if !cat.is_null() {
        drop(Box::from_raw(cat));
    }
}

/// # Safety
/// `cat` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ft_category_object_count(cat: *const FtCategory, out: *mut usize) -> FtStatus {
    guard(|| write_out(out, borrow(cat, "category")?.inner.n_objects()))
}

/// Number of morphisms from object `x` to object `y`.
///
/// # Safety
/// `cat` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ft_category_hom_size(cat: *const FtCategory, x: usize, y: usize, out: *mut usize) -> FtStatus {
    guard(|| {
        let c = &borrow(cat, "category")?.inner;
        if x >= c.n_objects() || y >= c.n_objects() {
            return fail(FtStatus::InvalidInput, format!("objects ({x}, {y}) out of range"));
        }
        write_out(out, c.hom_len(x, y))
    })
}

/// Checks the identity and associativity axioms exhaustively; writes the number of violations.
///
/// # Safety
/// `cat` must be a live handle and `violations` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ft_category_validate(cat: *const FtCategory, violations: *mut usize) -> FtStatus {
    guard(|| write_out(violations, validate_category(&borrow(cat, "category")?.inner).len()))
}

/// The constant module with value the ground field and identity actions.
///
/// # Safety
/// `cat` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ft_module_trivial(
    cat: *const FtCategory,
    p: u32,
    variance_kind: FtVariance,
    out: *mut *mut FtModule,
) -> FtStatus {
    guard(|| {
        let c = &borrow(cat, "category")?.inner;
        let inner = build_module(p, |f| Ok(f.trivial(c, variance(variance_kind))))?;
        write_out(out, Box::into_raw(Box::new(FtModule { inner })))
    })
}

/// The representable module at `object`: `K[Hom(object, -)]` when covariant,
/// `K[Hom(-, object)]` when contravariant.
///
/// # Safety
/// `cat` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ft_module_representable(
    cat: *const FtCategory,
    p: u32,
    object: usize,
    variance_kind: FtVariance,
    out: *mut *mut FtModule,
) -> FtStatus {
    guard(|| {
        let c = &borrow(cat, "category")?.inner;
        if object >= c.n_objects() {
            return fail(FtStatus::InvalidInput, format!("object {object} out of range"));
        }
        let inner = build_module(p, |f| Ok(f.representable(c, object, variance(variance_kind))))?;
        write_out(out, Box::into_raw(Box::new(FtModule { inner })))
    })
}

/// Loads a module from JSON. The JSON must name the category by the spec it was built
/// from (for example `"f_as:3"`) or embed the same composition table.
///
/// # Safety
/// `cat` must be a live handle, `json` a NUL-terminated string and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ft_module_from_json(
    cat: *const FtCategory,
    p: u32,
    json: *const c_char,
    out: *mut *mut FtModule,
) -> FtStatus {
    guard(|| {
        let cat = borrow(cat, "category")?;
        let j: ModuleJson = serde_json::from_str(text(json, "json")?)?;
        let inner = build_module(p, |f| f.from_json(&j, &cat.inner, &cat.label))?;
        write_out(out, Box::into_raw(Box::new(FtModule { inner })))
    })
}

/// Releases a module.
///
/// # Safety
/// `module` must come from an `ft_module_*` constructor and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ft_module_free(module: *mut FtModule) {
    if !module.is_null() {
        drop(Box::from_raw(module));
    }
}

/// Writes the dimension at each object into `out`, which must hold one entry per object.
///
/// # Safety
/// `module` must be a live handle and `out` valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn ft_module_dims(module: *const FtModule, out: *mut usize, len: usize) -> FtStatus {
    guard(|| {
        let dims = match &borrow(module, "module")?.inner {
            AnyModule::Rational(m) => m.dims().to_vec(),
            AnyModule::Prime(m) => m.dims().to_vec(),
        };
        write_dims(&dims, out, len)
    })
}

fn tor_dims<F: Field>(left: &CatModule<F>, right: &CatModule<F>, d: usize, side: Side) -> Result<Vec<usize>, Failure> {
    Ok(tor(left, right, d, side, CoverStrategy::Greedy)?)
}

/// Dimensions of `Tor_k(left, right)` for `k = 0..=max_degree`, written to `out`, which must
/// hold `max_degree + 1` entries. `left` is contravariant and `right` covariant over the
/// same category and field.
///
/// # Safety
/// The module handles must be live and `out` valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn ft_tor(
    left: *const FtModule,
    right: *const FtModule,
    max_degree: usize,
    side: FtSide,
    out: *mut usize,
    len: usize,
) -> FtStatus {
    guard(|| {
        let side = match side {
            FtSide::ResolveContravariant => Side::ResolveContravariant,
            FtSide::ResolveCovariant => Side::ResolveCovariant,
        };
        let dims = match (&borrow(left, "left")?.inner, &borrow(right, "right")?.inner) {
            (AnyModule::Rational(l), AnyModule::Rational(r)) => tor_dims(l, r, max_degree, side)?,
            (AnyModule::Prime(l), AnyModule::Prime(r)) if l.field() == r.field() => tor_dims(l, r, max_degree, side)?,
            _ => return fail(FtStatus::FieldMismatch, "modules have different coefficient fields"),
        };
        write_dims(&dims, out, len)
    })
}

fn with_algebra_field<T>(
    j: &AlgebraJson,
    rational: impl FnOnce(&Rationals) -> Result<T, Error>,
    prime: impl FnOnce(&PrimeField) -> Result<T, Error>,
) -> Result<T, Failure> {
    let tag = j.field_tag()?;
    Ok(match tag {
        functor_tor::linalg::FieldTag::Rational => rational(&Rationals)?,
        functor_tor::linalg::FieldTag::Prime(p) => prime(&PrimeField::new(p)?)?,
    })
}

fn hochschild_dims<F: Field>(field: &F, a: &AlgebraJson, m: Option<&BimoduleJson>, d: usize) -> Result<Vec<usize>, Error> {
    let a = algebra_from_json(field, a)?;
    let m = match m {
        Some(j) => bimodule_from_json(&a, j)?,
        None => a.regular_bimodule(),
    };
    hochschild_oracle(&a, &m, d)
}

/// Hochschild homology dimensions `HH_0..HH_max_degree` of an algebra given as JSON, with
/// coefficients in a bimodule given as JSON or, when `bimodule_json` is null, in the algebra.
///
/// # Safety
/// The strings must be NUL-terminated (or `bimodule_json` null) and `out` valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn ft_hochschild_dims(
    algebra_json: *const c_char,
    bimodule_json: *const c_char,
    max_degree: usize,
    out: *mut usize,
    len: usize,
) -> FtStatus {
    guard(|| {
        let a: AlgebraJson = serde_json::from_str(text(algebra_json, "algebra")?)?;
        let m: Option<BimoduleJson> =
            if bimodule_json.is_null() { None } else { Some(serde_json::from_str(text(bimodule_json, "bimodule")?)?) };
        let dims = with_algebra_field(
            &a,
            |f| hochschild_dims(f, &a, m.as_ref(), max_degree),
            |f| hochschild_dims(f, &a, m.as_ref(), max_degree),
        )?;
        write_dims(&dims, out, len)
    })
}

/// Cyclic homology dimensions `HC_0..HC_max_degree` of an algebra given as JSON.
///
/// # Safety
/// `algebra_json` must be NUL-terminated and `out` valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn ft_cyclic_dims(algebra_json: *const c_char, max_degree: usize, out: *mut usize, len: usize) -> FtStatus {
    guard(|| {
        let a: AlgebraJson = serde_json::from_str(text(algebra_json, "algebra")?)?;
        let dims = with_algebra_field(
            &a,
            |f| cyclic_oracle(&algebra_from_json(f, &a)?, max_degree),
            |f| cyclic_oracle(&algebra_from_json(f, &a)?, max_degree),
        )?;
        write_dims(&dims, out, len)
    })
}
