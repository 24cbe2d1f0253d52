union num {
    int i;
    float f;
};

int main(void)
{
    return 0;
}
