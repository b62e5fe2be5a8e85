"""
-*- coding: utf-8 -*-
@FileName: exceptions.py
@DateTime: 2025/10/18
@Docs: 应用程序异常定义
"""

from typing import Any

# 退出码约定：0 通过 / 1 性质失败 / 2 输入错误
EXIT_PASS = 0
EXIT_FAILURE = 1
EXIT_INPUT_ERROR = 2


class GyroException(Exception):
    """异常基类"""

    def __init__(
        self,
        message: str = "内部错误",
        detail: str | dict[str, Any] | list[Any] | None = None,
        exit_code: int = EXIT_FAILURE,
    ):
        self.message = message
        self.detail = detail
        self.exit_code = exit_code
        super().__init__(self.message)

    def to_dict(self) -> dict[str, Any]:
        """转换为错误响应字典"""
        return {"code": self.exit_code, "message": self.message, "detail": self.detail}


class InputException(GyroException):
    """输入参数错误"""

    def __init__(
        self,
        message: str = "输入参数错误",
        detail: str | dict[str, Any] | list[Any] | None = None,
    ):
        super().__init__(message=message, detail=detail, exit_code=EXIT_INPUT_ERROR)


class DomainViolationException(InputException):
    """元素不在模型定义域内"""

    def __init__(
        self,
        model_name: str,
        element: str,
        message: str = "元素超出模型定义域",
        detail: str | dict[str, Any] | None = None,
    ):
        self.model_name = model_name
        self.element = element
        full_message = f"{message}: {element} (模型: {model_name})"
        super().__init__(message=full_message, detail=detail)


class NotRadialException(InputException):
    """模型没有范数，无法进行径向构造"""

    def __init__(self, model_name: str, detail: str | dict[str, Any] | None = None):
        self.model_name = model_name
        super().__init__(message=f"模型不是径向模型: {model_name}", detail=detail)


class TableFormatException(InputException):
    """Cayley表文件格式错误"""

    def __init__(
        self,
        source: str,
        message: str = "Cayley表格式错误",
        detail: str | dict[str, Any] | list[Any] | None = None,
    ):
        self.source = source
        super().__init__(message=f"{message}: {source}", detail=detail)


class TableInvalidException(GyroException):
    """Cayley表违反陀螺群公理"""

    def __init__(
        self,
        axiom: str,
        witness: list[str] | None = None,
        message: str = "Cayley表不是陀螺群",
        detail: str | dict[str, Any] | None = None,
    ):
        self.axiom = axiom
        self.witness = witness or []
        if detail is None:
            detail = {"axiom": axiom, "witness": self.witness}
        super().__init__(message=f"{message} ({axiom})", detail=detail, exit_code=EXIT_FAILURE)


class NotAssociativeException(TableInvalidException):
    """群适配器要求结合律"""

    def __init__(self, witness: list[str], detail: str | dict[str, Any] | None = None):
        super().__init__(axiom="associativity", witness=witness, message="Cayley表不满足结合律", detail=detail)


class NotAPartitionException(GyroException):
    """左陪集不构成划分"""

    def __init__(
        self,
        witness: list[str],
        message: str = "左陪集不构成划分",
        detail: str | dict[str, Any] | None = None,
    ):
        self.witness = witness
        if detail is None:
            detail = {"witness": witness}
        super().__init__(message=message, detail=detail, exit_code=EXIT_FAILURE)
