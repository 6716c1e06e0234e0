from typing import Callable, Tuple, TypeVar

Ok = TypeVar('Ok')
Error = TypeVar('Error')
Mapped = TypeVar('Mapped')


class Either(Tuple[Ok, Error]):

    def __new__(cls, ok: Ok, error: Error):
        return super().__new__(cls, (ok, error))

    def __getnewargs__(self):
        return self[0], self[1]

    @property
    def ok(self) -> Ok:
        return self[0]

    @property
    def error(self) -> Error:
        return self[1]

    @property
    def is_ok(self) -> bool:
        return self[1] is None

    @property
    def is_error(self) -> bool:
        return self[1] is not None

    @staticmethod
    def of(ok: Ok) -> 'Either[Ok, None]':
        return Either(ok, None)

    @staticmethod
    def fail(error: Error) -> 'Either[None, Error]':
        return Either(None, error)

    @staticmethod
    def safe(fn: Callable[[], Ok]) -> 'Either[Ok, Exception]':
        try:
            return Either.of(fn())
        except Exception as ex:  # pylint: disable=broad-exception-caught
            return Either.fail(ex)

    def map(self, fn: Callable[[Ok], Mapped]) -> 'Either[Mapped, Error]':
        if self.is_error:
            return self
        return Either.safe(lambda: fn(self.ok))

    def unwrap(self) -> Ok:
        if self.is_error:
            raise self.error
        return self.ok

    def __repr__(self) -> str:
        return f'Either({self[0]}, {self[1]})'
